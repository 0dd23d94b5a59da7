"""Expression trees for the two sides of an identity.

Every node evaluates to a PSeries known at least to the requested order and
renders itself in the corpus grammar; ``grammar.parse_expr`` inverts ``render``.
"""
from __future__ import annotations

import logging
from abc import ABC, abstractmethod
from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction
from typing import ClassVar, Sequence

from ..errors import ProductError, SeriesError
from ..models import (
    GEtaList,
    HyperSum,
    JSpec,
    Monomial,
    MultiSum,
    NahmTriple,
    PochFactor,
    PochTemplate,
    Rational,
    Status,
    as_rational,
)
from ..nahm import hyper_sum, multi_sum, nahm_sum
from ..products import (
    expand_product,
    geta_expand,
    jacobi_triple_product,
    jacobi_triple_sum,
    jquot,
    theta_sum,
)
from ..series import PSeries, ps_from_monomial, ps_inv, ps_subst_power

logger = logging.getLogger(__name__)


def render_rational(x: Rational) -> str:
    return str(as_rational(x))


def render_vector(items: Sequence[Rational]) -> str:
    return "[" + ",".join(render_rational(x) for x in items) + "]"


def render_matrix(rows: Sequence[Sequence[Rational]]) -> str:
    return "[" + ",".join(render_vector(row) for row in rows) + "]"


def render_monomial(m: Monomial) -> str:
    return f"mono({render_rational(m.coeff)},{render_rational(m.exp)})"


def render_poch(f: PochFactor) -> str:
    length = "inf" if f.length is None else str(f.length)
    return (
        f"f(a={render_monomial(f.a)},base={render_rational(f.base)},"
        f"len={length},power={f.power})"
    )


def render_template(t: PochTemplate) -> str:
    return (
        f"tpl(a={render_monomial(t.a)},base={render_rational(t.base)},"
        f"l={t.l},s={t.s},power={t.power})"
    )


def render_jspec(spec: JSpec) -> str:
    args = str(spec.modulus) if spec.residue is None else f"{spec.residue},{spec.modulus}"
    power = abs(spec.power)
    return f"J({args})" if power == 1 else f"J({args},power={power})"


def normalize_jspecs(specs: Sequence[JSpec]) -> tuple[JSpec, ...]:
    """Merge equal factors, fold J_{a,m} onto a <= m/2 and drop cancelled ones."""
    powers: Counter[tuple[int, int]] = Counter()
    for spec in specs:
        residue = 0 if spec.residue is None else min(spec.residue, spec.modulus - spec.residue)
        powers[(spec.modulus, residue)] += spec.power
    return tuple(
        JSpec(m, a or None, p) for (m, a), p in sorted(powers.items()) if p != 0
    )


class ExprNode(ABC):
    name: ClassVar[str] = "expr"

    @abstractmethod
    def evaluate(self, order: Fraction) -> PSeries:
        raise NotImplementedError

    @abstractmethod
    def render(self) -> str:
        raise NotImplementedError

    def __str__(self) -> str:
        return self.render()


@dataclass(frozen=True, slots=True)
class MonomialNode(ExprNode):
    name: ClassVar[str] = "mono"
    monomial: Monomial

    def evaluate(self, order: Fraction) -> PSeries:
        return ps_from_monomial(self.monomial, order)

    def render(self) -> str:
        return render_monomial(self.monomial)


@dataclass(frozen=True, slots=True)
class NahmSumNode(ExprNode):
    name: ClassVar[str] = "nahm"
    triple: NahmTriple

    def evaluate(self, order: Fraction) -> PSeries:
        return nahm_sum(self.triple, order)

    def render(self) -> str:
        t = self.triple
        return f"nahm(A={render_matrix(t.A)},B={render_vector(t.B)},C={render_rational(t.C)})"


@dataclass(frozen=True, slots=True)
class MultiSumNode(ExprNode):
    name: ClassVar[str] = "multi"
    form: MultiSum

    def evaluate(self, order: Fraction) -> PSeries:
        return multi_sum(self.form, order)

    def render(self) -> str:
        s = self.form
        return (
            f"multi(Q={render_matrix(s.Q)},L={render_vector(s.L)},"
            f"c={render_rational(s.c)},d={render_vector(s.d)})"
        )


@dataclass(frozen=True, slots=True)
class HyperSumNode(ExprNode):
    name: ClassVar[str] = "hyper"
    series: HyperSum

    def evaluate(self, order: Fraction) -> PSeries:
        return hyper_sum(self.series, order)

    def render(self) -> str:
        h = self.series
        terms = "[" + ",".join(render_template(t) for t in h.factors) + "]"
        return (
            f"hyper(alpha={render_rational(h.alpha)},beta={render_rational(h.beta)},"
            f"gamma={render_rational(h.gamma)},z={render_monomial(h.z)},"
            f"alt={'true' if h.alternating else 'false'},terms={terms})"
        )


@dataclass(frozen=True, slots=True)
class ThetaNode(ExprNode):
    name: ClassVar[str] = "theta"
    alpha: Fraction
    nu: Fraction

    def __post_init__(self) -> None:
        object.__setattr__(self, "alpha", as_rational(self.alpha))
        object.__setattr__(self, "nu", as_rational(self.nu))

    def evaluate(self, order: Fraction) -> PSeries:
        return theta_sum(self.alpha, self.nu, order)

    def render(self) -> str:
        return f"theta(alpha={render_rational(self.alpha)},nu={render_rational(self.nu)})"


@dataclass(frozen=True, slots=True)
class JTripleNode(ExprNode):
    """(q, z, q/z; q)_inf, expanded as a product or through the bilateral sum."""

    name: ClassVar[str] = "jtriple"
    z: Monomial
    form: str = "product"

    def __post_init__(self) -> None:
        if self.form not in ("product", "sum"):
            raise ProductError(f"triple product form must be 'product' or 'sum', got {self.form!r}")

    def evaluate(self, order: Fraction) -> PSeries:
        if self.form == "sum":
            return jacobi_triple_sum(self.z, order)
        return jacobi_triple_product(self.z, order)

    def render(self) -> str:
        return f"jtriple(z={render_monomial(self.z)},form={self.form})"


@dataclass(frozen=True, slots=True)
class PochProductNode(ExprNode):
    name: ClassVar[str] = "poch"
    factors: tuple[PochFactor, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "factors", tuple(self.factors))

    def evaluate(self, order: Fraction) -> PSeries:
        return expand_product(self.factors, order)

    def render(self) -> str:
        return "poch(" + ",".join(render_poch(f) for f in self.factors) + ")"


@dataclass(frozen=True, slots=True)
class JQuotNode(ExprNode):
    name: ClassVar[str] = "jquot"
    specs: tuple[JSpec, ...]
    prefactor: Monomial = field(default_factory=Monomial)

    def __post_init__(self) -> None:
        object.__setattr__(self, "specs", normalize_jspecs(self.specs))

    def evaluate(self, order: Fraction) -> PSeries:
        return jquot(self.specs, self.prefactor, order)

    def render(self) -> str:
        num = ",".join(render_jspec(s) for s in self.specs if s.power > 0)
        den = ",".join(render_jspec(s) for s in self.specs if s.power < 0)
        return f"jquot(num=[{num}],den=[{den}],pre={render_monomial(self.prefactor)})"


@dataclass(frozen=True, slots=True)
class GEtaNode(ExprNode):
    name: ClassVar[str] = "geta"
    geta: GEtaList

    def evaluate(self, order: Fraction) -> PSeries:
        return geta_expand(self.geta, order)

    def render(self) -> str:
        rows = ",".join(f"[{f.delta},{f.g},{render_rational(f.r)}]" for f in self.geta.factors)
        return f"geta(level={self.geta.level},list=[{rows}])"


@dataclass(frozen=True, slots=True)
class ScaleNode(ExprNode):
    name: ClassVar[str] = "scale"
    child: ExprNode
    factor: Fraction

    def __post_init__(self) -> None:
        object.__setattr__(self, "factor", as_rational(self.factor))

    def evaluate(self, order: Fraction) -> PSeries:
        return self.child.evaluate(order) * self.factor

    def render(self) -> str:
        return f"scale({self.child.render()},c={render_rational(self.factor)})"


@dataclass(frozen=True, slots=True)
class SumNode(ExprNode):
    name: ClassVar[str] = "sum"
    children: tuple[ExprNode, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "children", tuple(self.children))

    def evaluate(self, order: Fraction) -> PSeries:
        total = PSeries.zero(order)
        for child in self.children:
            total = total + child.evaluate(order)
        return total

    def render(self) -> str:
        return "sum(" + ",".join(c.render() for c in self.children) + ")"


@dataclass(frozen=True, slots=True)
class ProductNode(ExprNode):
    name: ClassVar[str] = "prod"
    children: tuple[ExprNode, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "children", tuple(self.children))

    def evaluate(self, order: Fraction) -> PSeries:
        # a factor with negative valuation lowers the precision of every other factor
        parts = [child.evaluate(order) for child in self.children]
        valuations = [p.valuation() for p in parts]
        total_valuation = sum(valuations, Fraction(0))
        for i, child in enumerate(self.children):
            needed = order - (total_valuation - valuations[i])
            if needed > parts[i].order:
                logger.debug("re-evaluating %s factor to order %s", child.name, needed)
                parts[i] = child.evaluate(needed)
        if not parts:
            return PSeries.one(order)
        result = parts[0]
        for part in parts[1:]:
            result = result * part
        return result.truncated(order)

    def render(self) -> str:
        return "prod(" + ",".join(c.render() for c in self.children) + ")"


@dataclass(frozen=True, slots=True)
class InvNode(ExprNode):
    name: ClassVar[str] = "inv"
    child: ExprNode

    def evaluate(self, order: Fraction) -> PSeries:
        base = self.child.evaluate(order)
        if base.is_zero():
            raise SeriesError("non-invertible series")
        needed = order + 2 * base.valuation()
        if needed > base.order:
            base = self.child.evaluate(needed)
        return ps_inv(base).truncated(order)

    def render(self) -> str:
        return f"inv({self.child.render()})"


@dataclass(frozen=True, slots=True)
class SubstNode(ExprNode):
    """q -> q^k."""

    name: ClassVar[str] = "subst"
    child: ExprNode
    k: Fraction

    def __post_init__(self) -> None:
        object.__setattr__(self, "k", as_rational(self.k))
        if self.k <= 0:
            raise SeriesError(f"substitution power must be positive, got {self.k}")

    def evaluate(self, order: Fraction) -> PSeries:
        return ps_subst_power(self.child.evaluate(order / self.k), self.k)

    def render(self) -> str:
        return f"subst({self.child.render()},k={render_rational(self.k)})"


def eval_expr(node: ExprNode, order: Rational) -> PSeries:
    order = as_rational(order)
    result = node.evaluate(order)
    return result.truncated(order) if result.order > order else result


@dataclass(frozen=True, slots=True)
class Identity:
    id: str
    lhs: ExprNode
    rhs: ExprNode
    status: Status = "auxiliary"
    provenance: str = ""
    note: str = ""
    C: Fraction | None = None
    q_scale: int = 1
