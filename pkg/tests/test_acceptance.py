"""Long verification runs over the built-in corpus; deselect with -m 'not slow'."""
import os

import pytest

from nahm_qseries.catalog import builtin_dissections, eval_expr, parse_expr, verify_all
from nahm_qseries.catalog.verify import run_dissection_case
from nahm_qseries.formatters import format_verify_errors
from nahm_qseries.search import fit_product, jquot_exponents, residue_pattern
from nahm_qseries.series import ps_dissect

pytestmark = pytest.mark.slow

WORKERS = min(8, os.cpu_count() or 1)
EXAMPLE_5_SUM = "subst(nahm(A=[[1/3,-1/3],[-1/3,4/3]],B=[-1/6,2/3],C=0),k=3)"


def assert_all_equal(reports):
    assert reports
    assert all(report.ok for report in reports), format_verify_errors(reports, max_items=10)


@pytest.mark.parametrize(
    "pattern",
    ["exam2-*", "exam3-*", "exam4-*", "exam6-*", "exam7-*", "exam8-*", "exam9-*", "exam11-*"],
)
def test_headline_identities_to_order_200(pattern):
    assert_all_equal(verify_all(200, WORKERS, id_filter=pattern))


def test_conjectural_identities_to_order_300():
    reports = verify_all(300, WORKERS, status_filter="conjectural-in-paper")
    assert len(reports) == 6
    assert_all_equal(reports)


def test_slater_entries_to_order_200():
    reports = verify_all(200, WORKERS, id_filter="S.*")
    assert len(reports) == 29
    assert_all_equal(reports)


@pytest.mark.parametrize("case", builtin_dissections(), ids=lambda case: case.id)
def test_dissection_components_to_order_200(case):
    assert_all_equal(run_dissection_case(case, 200))


def test_full_corpus_to_order_100():
    assert_all_equal(verify_all(100, WORKERS))


def test_fit_recovers_product_component_and_rejects_the_other():
    components = ps_dissect(eval_expr(parse_expr(EXAMPLE_5_SUM), 360), 3)
    expected = next(case for case in builtin_dissections() if case.id == "exam5-1-F").expected[0]

    fit = fit_product(components[0], 30)
    assert fit is not None
    assert fit.scalar == 2
    assert fit.q_power == 0
    assert residue_pattern(fit.exponents, 30) == jquot_exponents(expected.specs, 30)

    assert fit_product(components[1], 30) is None
