import json

import pytest

from nahm_qseries.cli import EXIT_FAILED, EXIT_OK, EXIT_USAGE, run

EXAMPLE_7_LIST = "[[1176,84,-2],[1176,168,-1],[1176,252,-2],[1176,420,-3],[1176,504,-1],[1176,588,-1]]"


@pytest.fixture(autouse=True)
def clean_env(monkeypatch):
    for name in ("NAHM_QSERIES_ORDER", "NAHM_QSERIES_WORKERS", "NAHM_QSERIES_CORPUS"):
        monkeypatch.delenv(name, raising=False)


def test_eval_prints_expansion(capsys):
    assert run(["eval", "--expr", "nahm(A=[[2]],B=[0],C=0)", "--order", "5"]) == EXIT_OK
    assert capsys.readouterr().out == "1 + q + q^2 + q^3 + 2q^4\n"


def test_modcheck_reproduces_printed_session(capsys):
    assert run(["modcheck", "--geta", EXAMPLE_7_LIST, "--level", "7056"]) == EXIT_OK
    assert capsys.readouterr().out.strip() == "valinf=128 val0=-10 modular=true"


def test_modcheck_trace_and_failure(capsys):
    assert run(["modcheck", "--geta", "[[5,1,1],[5,2,-1]]", "--trace"]) == EXIT_FAILED
    out = capsys.readouterr().out.splitlines()
    assert out[0] == "geta-list at level 5"
    assert "criterion not met" in out
    assert out[-1] == "valinf=2/5 val0=0 modular=false"


def test_scale_geta_list(capsys):
    assert run(["scale", "--geta", "[[5,1,1],[5,2,-1]]"]) == EXIT_OK
    assert capsys.readouterr().out.strip() == "k=5 n0=1 level=25"


def test_scale_corpus_identity(capsys):
    assert run(["scale", "--id", "exam7-1"]) == EXIT_OK
    lines = capsys.readouterr().out.splitlines()
    assert len(lines) == 3
    assert lines[-1] == "C=-5/84 k=84 level=7056"


def test_verify_one_identity(capsys):
    assert run(["verify", "--id", "RR-1", "--order", "30"]) == EXIT_OK
    assert capsys.readouterr().out.strip() == "RR-1: equal to order 30"


def test_verify_unknown_identity(capsys):
    assert run(["verify", "--id", "nope"]) == EXIT_FAILED
    assert "unknown identity id 'nope'" in capsys.readouterr().err


def test_verify_all_json(capsys):
    argv = ["verify-all", "--id-glob", "RR-*", "--order", "30", "--workers", "1", "--format", "json"]
    assert run(argv) == EXIT_OK
    document = json.loads(capsys.readouterr().out)
    assert document["order"] == "30"
    assert [r["id"] for r in document["results"]] == ["RR-1", "RR-2"]
    assert "timings" not in document


def test_verify_all_text_summary(capsys):
    argv = ["verify-all", "--id-glob", "RR-*", "--order", "20", "--workers", "1", "--timings"]
    assert run(argv) == EXIT_OK
    out = capsys.readouterr().out.splitlines()
    assert out[0].startswith("RR-1: equal to order 20 [")
    assert out[-1] == "2 identities checked: 2 equal, 0 mismatch, 0 error"


def test_verify_all_on_custom_corpus_reports_mismatch(tmp_path, capsys):
    path = tmp_path / "corpus.jsonl"
    path.write_text(
        '{"id": "bad", "lhs": "nahm(A=[[2]],B=[0])", "rhs": "jquot(num=[J(5)],den=[J(2,5)])"}\n',
        encoding="utf-8",
    )
    assert run(["verify-all", "--corpus", str(path), "--order", "10", "--workers", "1"]) == EXIT_FAILED
    out = capsys.readouterr().out
    assert "bad: mismatch at q (lhs 1, rhs 0, order 10)" in out


def test_dissect_expression(capsys):
    assert run(["dissect", "--expr", "nahm(A=[[2]],B=[0])", "--m", "2", "--order", "10"]) == EXIT_OK
    assert capsys.readouterr().out.splitlines() == [
        "F0 = 1 + q + 2q^2 + 3q^3 + 4q^4 + O(q^5)",
        "F1 = 1 + q + 2q^2 + 3q^3 + 5q^4 + O(q^5)",
    ]


def test_dissect_expression_needs_modulus(capsys):
    assert run(["dissect", "--expr", "nahm(A=[[2]],B=[0])"]) == EXIT_FAILED
    assert "--m is required" in capsys.readouterr().err


def test_fit_recognizes_rogers_ramanujan(capsys):
    assert run(["fit", "--expr", "nahm(A=[[2]],B=[0])", "--modulus", "5", "--order", "60"]) == EXIT_OK
    assert capsys.readouterr().out.strip() == "J_5 / (J_{1,5})"


def test_export_corpus(tmp_path, capsys):
    out = tmp_path / "corpus.jsonl"
    assert run(["export-corpus", "--out", str(out)]) == EXIT_OK
    written = len(out.read_text(encoding="utf-8").splitlines())
    assert capsys.readouterr().out.strip() == f"wrote {written} identities to {out}"


@pytest.mark.parametrize(
    "argv, message",
    [
        (["eval", "--expr", "nahm(A=[[2]]", "--order", "5"], "parse error"),
        (["eval", "--expr", "mono(1,0)", "--order", "abc"], "order must be a rational number"),
        (["eval", "--expr", "mono(1,0)", "--order", "0"], "order must be at least 1"),
        (["verify-all", "--id-glob", "RR-*", "--workers", "0"], "parallelism must be at least 1"),
        (["verify-all", "--id-glob", "RR-*", "--workers", "-2"], "parallelism must be at least 1"),
    ],
)
def test_usage_errors(argv, message, capsys):
    assert run(argv) == EXIT_USAGE
    assert message in capsys.readouterr().err


def test_bad_environment_is_a_usage_error(monkeypatch, capsys):
    monkeypatch.setenv("NAHM_QSERIES_WORKERS", "many")
    assert run(["eval", "--expr", "mono(1,0)", "--order", "3"]) == EXIT_USAGE
    assert "configuration error" in capsys.readouterr().err


def test_argparse_exits_are_mapped():
    assert run([]) == EXIT_USAGE
    assert run(["--help"]) == EXIT_OK
    assert run(["verify"]) == EXIT_USAGE
