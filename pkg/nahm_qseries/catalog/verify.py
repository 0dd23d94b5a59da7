from __future__ import annotations

import fnmatch
import logging
import time
from fractions import Fraction
from typing import Iterable, Literal, Sequence

from pydantic import BaseModel, ConfigDict, field_serializer, model_validator

from ..errors import ModularityError
from ..modularity import JTerm, LevelReport, nahm_level
from ..models import Monomial, Rational, Status, as_rational
from ..series import PSeries, ps_dissect, ps_eq_upto
from .corpus import builtin_corpus
from .dissections import DissectionCase
from .expr import ExprNode, Identity, JQuotNode, ScaleNode, SumNode, eval_expr

logger = logging.getLogger(__name__)

Outcome = Literal["equal", "mismatch", "error"]


class VerifyReport(BaseModel):
    model_config = ConfigDict(arbitrary_types_allowed=True, frozen=True)

    identity_id: str
    order: Fraction
    outcome: Outcome
    exponent: Fraction | None = None
    lhs_coeff: Fraction | None = None
    rhs_coeff: Fraction | None = None
    error: str | None = None
    elapsed_s: float = 0.0

    @model_validator(mode="after")
    def validate_outcome(self: VerifyReport) -> VerifyReport:
        if self.outcome == "mismatch":
            if self.exponent is None:
                raise ValueError("a mismatch needs the exponent where the sides differ")
            if self.exponent >= self.order:
                raise ValueError(
                    f"mismatch exponent {self.exponent} must lie below the order {self.order}"
                )
        if self.outcome == "error" and not self.error:
            raise ValueError("an error report needs a message")
        return self

    @field_serializer("order", "exponent", "lhs_coeff", "rhs_coeff")
    def serialize_rational(self, value: Fraction | None) -> str | None:
        return None if value is None else str(value)

    @property
    def ok(self) -> bool:
        return self.outcome == "equal"


def _compare(identity_id: str, lhs: PSeries, rhs: PSeries, order: Fraction, elapsed: float) -> VerifyReport:
    comparison = ps_eq_upto(lhs, rhs, order)
    if comparison.equal:
        return VerifyReport(identity_id=identity_id, order=order, outcome="equal", elapsed_s=elapsed)
    return VerifyReport(
        identity_id=identity_id,
        order=order,
        outcome="mismatch",
        exponent=comparison.exponent,
        lhs_coeff=comparison.left,
        rhs_coeff=comparison.right,
        elapsed_s=elapsed,
    )


def verify(identity: Identity, order: Rational) -> VerifyReport:
    """Compare both sides below q^order; evaluation failures become error reports."""
    order = as_rational(order)
    started = time.perf_counter()
    try:
        lhs = eval_expr(identity.lhs, order)
        rhs = eval_expr(identity.rhs, order)
        report = _compare(identity.id, lhs, rhs, order, time.perf_counter() - started)
    except Exception as exc:
        report = VerifyReport(
            identity_id=identity.id,
            order=order,
            outcome="error",
            error=str(exc) or type(exc).__name__,
            elapsed_s=time.perf_counter() - started,
        )
    logger.debug("%s: %s in %.3fs", identity.id, report.outcome, report.elapsed_s)
    return report


def select_identities(
    identities: Iterable[Identity],
    id_filter: str | None = None,
    status_filter: Status | None = None,
) -> list[Identity]:
    selected = [
        identity
        for identity in identities
        if (id_filter is None or fnmatch.fnmatchcase(identity.id, id_filter))
        and (status_filter is None or identity.status == status_filter)
    ]
    return sorted(selected, key=lambda identity: identity.id)


def verify_all(
    order: Rational,
    parallelism: int = 1,
    corpus: Sequence[Identity] | None = None,
    id_filter: str | None = None,
    status_filter: Status | None = None,
) -> list[VerifyReport]:
    identities = select_identities(
        builtin_corpus() if corpus is None else corpus, id_filter, status_filter
    )
    if not identities:
        return []
    from ..config import EngineConfig
    from ..orchestrator import VerificationRunner

    runner = VerificationRunner(EngineConfig(max_workers=parallelism))
    return runner.run(identities, as_rational(order))


def dissection_check(
    lhs: ExprNode,
    m: int,
    expected: dict[int, ExprNode | None],
    order: Rational,
    case_id: str = "dissection",
) -> list[VerifyReport]:
    """Dissect lhs to q^order and compare component j below its own order ceil((order - j)/m)."""
    order = as_rational(order)
    started = time.perf_counter()
    components = ps_dissect(eval_expr(lhs, order), m)
    reports = []
    for j, component in enumerate(components):
        if j not in expected:
            continue
        node = expected[j]
        target = PSeries.zero(component.order) if node is None else eval_expr(node, component.order)
        reports.append(
            _compare(f"{case_id}[{j}]", component, target, component.order, time.perf_counter() - started)
        )
    return reports


def run_dissection_case(case: DissectionCase, order: Rational) -> list[VerifyReport]:
    return dissection_check(case.lhs, case.m, case.expected, order, case.id)


def jquot_terms(node: ExprNode) -> list[JTerm]:
    """Flatten a sum of scaled J-quotients into (specs, prefactor) terms."""
    if isinstance(node, JQuotNode):
        return [(node.specs, node.prefactor)]
    if isinstance(node, SumNode):
        return [term for child in node.children for term in jquot_terms(child)]
    if isinstance(node, ScaleNode):
        return [
            (specs, Monomial(pre.coeff * node.factor, pre.exp))
            for specs, pre in jquot_terms(node.child)
        ]
    raise ModularityError(f"product side is not a sum of J-quotients: {node.name} node")


def level_report(identity: Identity) -> LevelReport:
    if identity.C is None:
        raise ModularityError(f"{identity.id} carries no constant C")
    return nahm_level(jquot_terms(identity.rhs), identity.C, identity.q_scale)
