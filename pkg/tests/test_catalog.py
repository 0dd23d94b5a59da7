from fractions import Fraction

import pytest

from nahm_qseries.catalog import (
    Identity,
    andrews_gordon,
    builtin_corpus,
    builtin_dissections,
    corpus_index,
    dissection_check,
    eval_expr,
    jquot_terms,
    level_report,
    verify,
    verify_all,
    vz_double,
)
from nahm_qseries.catalog.families import jq, nahm
from nahm_qseries.catalog.verify import VerifyReport, run_dissection_case, select_identities
from nahm_qseries.config import EngineConfig
from nahm_qseries.errors import ModularityError, NahmError
from nahm_qseries.models import NahmTriple
from nahm_qseries.orchestrator import VerificationRunner
from nahm_qseries.series import ps_eq_upto


def test_corpus_ids_are_unique_and_sorted():
    ids = [identity.id for identity in builtin_corpus()]
    assert ids == sorted(ids)
    assert len(ids) == len(set(ids))
    assert {"RR-1", "RR-2", "exam7-1", "conj-10-1", "S.46"} <= set(ids)


def test_rogers_ramanujan_identity_holds():
    report = verify(corpus_index()["RR-1"], 60)
    assert report.ok
    assert report.order == 60


def test_wrong_product_side_is_a_mismatch():
    bad = Identity("RR-1-bad", nahm([[2]], [0]), jq([5], [(2, 5)]))
    report = verify(bad, 20)
    assert report.outcome == "mismatch"
    assert (report.exponent, report.lhs_coeff, report.rhs_coeff) == (1, 1, 0)


def test_evaluation_failure_becomes_error_report():
    broken = Identity("broken", nahm([[1, 2], [2, 1]], [0, 0]), jq([1]))
    report = verify(broken, 10)
    assert report.outcome == "error"
    assert "not a Nahm matrix" in report.error


def test_report_rejects_mismatch_at_or_above_order():
    with pytest.raises(ValueError):
        VerifyReport(identity_id="x", order=Fraction(5), outcome="mismatch", exponent=Fraction(5))
    with pytest.raises(ValueError):
        VerifyReport(identity_id="x", order=Fraction(5), outcome="error")


def test_andrews_gordon_base_case_is_rogers_ramanujan():
    ag = andrews_gordon(2, 2)
    assert verify(ag, 50).ok
    rr = corpus_index()["RR-1"]
    assert ps_eq_upto(eval_expr(ag.lhs, 50), eval_expr(rr.lhs, 50), 50).equal


@pytest.mark.parametrize("k, s", [(1, 1), (3, 0), (3, 4)])
def test_andrews_gordon_parameter_range(k, s):
    with pytest.raises(NahmError):
        andrews_gordon(k, s)


def test_doubling_construction():
    doubled, identity = vz_double(NahmTriple([[2]], [0], Fraction(-1, 60)))
    assert doubled == NahmTriple([[4, 1], [1, 1]], [0, Fraction(1, 2)], Fraction(1, 120))
    assert verify(identity, 40).ok


def test_status_filter_selects_the_conjectures():
    selected = select_identities(builtin_corpus(), status_filter="conjectural-in-paper")
    assert [identity.id for identity in selected] == [
        "conj-10-1",
        "conj-10-1-Wang",
        "conj-10-2",
        "conj-10-2-Wang",
        "exam5-1",
        "exam5-2",
    ]


def test_verify_all_with_glob():
    reports = verify_all(40, 1, id_filter="RR-*")
    assert [report.identity_id for report in reports] == ["RR-1", "RR-2"]
    assert all(report.ok for report in reports)


def test_verify_all_on_empty_selection():
    assert verify_all(40, corpus=[]) == []
    assert verify_all(40, id_filter="no-such-*") == []


def test_runner_deduplicates_and_caches():
    rr = corpus_index()["RR-1"]
    runner = VerificationRunner(EngineConfig(max_workers=1))
    first = runner.run([rr, rr], Fraction(20))
    assert len(first) == 1
    assert runner.run([rr], Fraction(20))[0] is first[0]


def test_runner_uses_worker_processes():
    reports = verify_all(30, parallelism=2, id_filter="RR-*")
    assert [report.outcome for report in reports] == ["equal", "equal"]


def test_dissection_case_components_vanish_or_match():
    case = next(case for case in builtin_dissections() if case.id == "exam9-1-F")
    reports = run_dissection_case(case, 80)
    assert [report.identity_id for report in reports] == [f"exam9-1-F[{j}]" for j in range(4)]
    assert all(report.ok for report in reports)


def test_dissection_check_reports_nonvanishing_component():
    reports = dissection_check(nahm([[2]], [0]), 2, {0: None}, 20)
    assert len(reports) == 1
    assert reports[0].identity_id == "dissection[0]"
    assert reports[0].outcome == "mismatch"
    assert reports[0].exponent == 0


def test_level_report_needs_constant():
    with pytest.raises(ModularityError, match="carries no constant"):
        level_report(corpus_index()["RR-1"])


def test_product_side_must_be_j_quotients():
    with pytest.raises(ModularityError, match="not a sum of J-quotients"):
        jquot_terms(nahm([[2]], [0]))


@pytest.mark.parametrize(
    "identity_id",
    [f"new-exam8-{n}-{letter}{j}-result" for n, letter in ((1, "R"), (2, "S"), (3, "T")) for j in (1, 2, 3)],
)
def test_second_proof_components_carry_their_scalar(identity_id):
    report = verify(corpus_index()[identity_id], 30)
    assert report.ok, report
