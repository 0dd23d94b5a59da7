import json
from fractions import Fraction

import pytest

from nahm_qseries.catalog import RunDocument, builtin_corpus, dump_corpus, load_corpus
from nahm_qseries.catalog.store import IdentityRecord
from nahm_qseries.catalog.verify import VerifyReport
from nahm_qseries.errors import ExpressionParseError

RR_LINE = '{"id": "RR-1", "lhs": "nahm(A=[[2]],B=[0],C=0)", "rhs": "jquot(num=[J(5)],den=[J(1,5)])"}'


def write_lines(path, *lines):
    path.write_text("\n".join(lines) + "\n", encoding="utf-8")
    return path


def test_corpus_survives_export_and_import(tmp_path):
    path = tmp_path / "corpus.jsonl"
    dump_corpus(builtin_corpus(), path)
    loaded = load_corpus(path)
    assert loaded == list(builtin_corpus())
    assert len(path.read_text(encoding="utf-8").splitlines()) == len(loaded)


def test_export_writes_one_sorted_record_per_line(tmp_path):
    path = tmp_path / "corpus.jsonl"
    corpus = builtin_corpus()
    dump_corpus(reversed(corpus[:3]), path)
    ids = [json.loads(line)["id"] for line in path.read_text(encoding="utf-8").splitlines()]
    assert ids == [identity.id for identity in corpus[:3]]


def test_minimal_record_gets_defaults(tmp_path):
    [identity] = load_corpus(write_lines(tmp_path / "one.jsonl", RR_LINE, ""))
    assert identity.id == "RR-1"
    assert identity.status == "auxiliary"
    assert identity.C is None
    assert identity.q_scale == 1


def test_record_keeps_constant_and_scale():
    record = IdentityRecord(id="x", lhs="mono(1,0)", rhs="mono(1,0)", C="-5/84", q_scale=4)
    identity = record.to_identity()
    assert identity.C == Fraction(-5, 84)
    assert IdentityRecord.from_identity(identity).C == "-5/84"


@pytest.mark.parametrize(
    "bad_line, column, message",
    [
        ("{bad", 2, "invalid JSON"),
        ('{"id": "", "lhs": "mono(1,0)", "rhs": "mono(1,0)"}', 1, "id:"),
        ('{"id": "x", "lhs": "mono(1,0)", "rhs": "mono(1,0)", "C": "abc"}', 1, "C:"),
        ('{"id": "x", "lhs": "mono(1,0)", "rhs": "mono(1,0)", "q_scale": 0}', 1, "q_scale:"),
        ('{"id": "x", "lhs": "mono(1,$)", "rhs": "mono(1,0)"}', 8, "lhs: unexpected character"),
        (RR_LINE, 1, "duplicate identity id 'RR-1'"),
    ],
)
def test_load_errors_point_at_line_and_column(tmp_path, bad_line, column, message):
    path = write_lines(tmp_path / "bad.jsonl", RR_LINE, bad_line)
    with pytest.raises(ExpressionParseError, match=message) as info:
        load_corpus(path)
    assert (info.value.line, info.value.column) == (2, column)


def test_run_document_is_sorted_and_drops_empty_fields():
    reports = [
        VerifyReport(identity_id="b", order=Fraction(50), outcome="equal", elapsed_s=0.5),
        VerifyReport(
            identity_id="a",
            order=Fraction(50),
            outcome="mismatch",
            exponent=Fraction(3, 2),
            lhs_coeff=Fraction(1),
            rhs_coeff=Fraction(-1, 2),
            elapsed_s=0.25,
        ),
    ]
    document = json.loads(RunDocument.from_reports(reports, Fraction(50)).to_json())
    assert document == {
        "order": "50",
        "results": [
            {"id": "a", "outcome": "mismatch", "exponent": "3/2", "lhs_coeff": "1", "rhs_coeff": "-1/2"},
            {"id": "b", "outcome": "equal"},
        ],
    }
    timed = json.loads(RunDocument.from_reports(reports, Fraction(50), include_timings=True).to_json())
    assert timed["timings"] == {"a": 0.25, "b": 0.5}
