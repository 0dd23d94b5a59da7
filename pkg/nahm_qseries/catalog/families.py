"""Builders for corpus entries and the parametric identity families."""
from __future__ import annotations

from fractions import Fraction
from typing import Sequence, Union

from ..errors import NahmError
from ..models import (
    HyperSum,
    JSpec,
    Monomial,
    MultiSum,
    NahmTriple,
    PochFactor,
    PochTemplate,
    Rational,
    as_rational,
)
from .expr import (
    ExprNode,
    HyperSumNode,
    Identity,
    InvNode,
    JQuotNode,
    JTripleNode,
    MonomialNode,
    MultiSumNode,
    NahmSumNode,
    PochProductNode,
    ProductNode,
    SubstNode,
    SumNode,
    ThetaNode,
    render_matrix,
    render_rational,
    render_vector,
)

JItem = Union[int, tuple[int, int]]

MAX_AG_RANK = 6


def _spec(item: JItem, power: int) -> JSpec:
    if isinstance(item, tuple):
        a, m = item
        return JSpec(m, a, power)
    return JSpec(item, None, power)


def jq(num: Sequence[JItem], den: Sequence[JItem] = (), c: Rational = 1, e: Rational = 0) -> JQuotNode:
    """c q^e prod(num) / prod(den); an int m is J_m, a pair (a, m) is J_{a,m}."""
    specs = [_spec(x, 1) for x in num] + [_spec(x, -1) for x in den]
    return JQuotNode(tuple(specs), Monomial(c, e))


def pf(c: Rational, e: Rational, base: Rational = 1, power: int = 1, length: int | None = None) -> PochFactor:
    """(c q^e; q^base)_length ** power."""
    return PochFactor(Monomial(c, e), base, length, power)


def poch(*factors: PochFactor) -> PochProductNode:
    return PochProductNode(tuple(factors))


def tpl(c: Rational, e: Rational, base: Rational = 1, l: int = 1, s: int = 0, power: int = 1) -> PochTemplate:
    return PochTemplate(Monomial(c, e), base, l, s, power)


def hyper(
    alpha: Rational,
    beta: Rational = 0,
    terms: Sequence[PochTemplate] = (),
    alternating: bool = False,
    z: Monomial = Monomial(),
    gamma: Rational = 0,
) -> HyperSumNode:
    return HyperSumNode(HyperSum(alpha, beta, gamma, z, alternating, tuple(terms)))


def nahm(A: Sequence[Sequence[Rational]], B: Sequence[Rational], C: Rational = 0) -> NahmSumNode:
    return NahmSumNode(NahmTriple(A, B, C))


def multi(Q, L, c: Rational = 0, d: Sequence[Rational] = ()) -> MultiSumNode:
    return MultiSumNode(MultiSum(Q, L, c, tuple(d)))


def mono(c: Rational = 1, e: Rational = 0) -> MonomialNode:
    return MonomialNode(Monomial(c, e))


def prod(*children: ExprNode) -> ProductNode:
    return ProductNode(tuple(children))


def add(*children: ExprNode) -> SumNode:
    return SumNode(tuple(children))


def subst(child: ExprNode, k: Rational) -> ExprNode:
    return child if as_rational(k) == 1 else SubstNode(child, k)


def inv(child: ExprNode) -> InvNode:
    return InvNode(child)


def euler_inverse() -> PochProductNode:
    """1/(q;q)_inf."""
    return poch(pf(1, 1, 1, -1))


def andrews_gordon(k: int, s: int) -> Identity:
    if not 2 <= k <= MAX_AG_RANK:
        raise NahmError(f"Andrews-Gordon rank k must lie in [2, {MAX_AG_RANK}], got {k}")
    if not 1 <= s <= k:
        raise NahmError(f"Andrews-Gordon index s must lie in [1, {k}], got {s}")
    size = k - 1
    A = [[2 * min(i, j) for j in range(1, size + 1)] for i in range(1, size + 1)]
    B = [max(0, i - s + 1) for i in range(1, size + 1)]
    return Identity(
        f"AG[k={k},s={s}]",
        multi(A, B),
        jq([(s, 2 * k + 1)], [1]),
        "auxiliary",
        "Andrews-Gordon identity",
    )


def vz_double(t: NahmTriple, identity_id: str | None = None) -> tuple[NahmTriple, Identity]:
    """The doubled triple (A', B', C') and f_{A',B',C'}(q) = q^{r/24} (J_2/J_1)^r f_{A,B,C}(q^2)."""
    r = t.rank
    A2 = [
        [
            (2 * t.A[i][j] if i < r and j < r else Fraction(int(i % r == j % r)))
            for j in range(2 * r)
        ]
        for i in range(2 * r)
    ]
    B2 = [2 * b for b in t.B] + [Fraction(1, 2)] * r
    C2 = 2 * t.C + Fraction(r, 24)
    doubled = NahmTriple(A2, B2, C2)
    identity_id = identity_id or (
        f"VZ[A={render_matrix(t.A)},B={render_vector(t.B)},C={render_rational(t.C)}]"
    )
    identity = Identity(
        identity_id,
        multi(doubled.A, doubled.B, doubled.C),
        prod(jq([2] * r, [1] * r, 1, Fraction(r, 24)), subst(nahm(t.A, t.B, t.C), 2)),
        "auxiliary",
        "Vlasenko-Zwegers doubling",
    )
    return doubled, identity


def lebesgue(e: int) -> Identity:
    """sum q^{n(n+1)/2} (-zq;q)_n/(q;q)_n = (-zq^2;q^2)_inf (-q;q)_inf at z = q^e."""
    return Identity(
        f"lebesgue[z=q^{e}]",
        hyper(1, Fraction(1, 2), [tpl(-1, e + 1), tpl(1, 1, power=-1)]),
        poch(pf(-1, e + 2, 2), pf(-1, 1)),
        "auxiliary",
        "Lebesgue's identity",
    )


def durfee(n: int) -> Identity:
    """Durfee rectangle: sum_j q^{j(j+n)}/((q;q)_j (q;q)_{j+n}) = 1/(q;q)_inf."""
    m = abs(n)
    lhs = prod(
        poch(pf(1, 1, 1, -1, m)),
        hyper(2, m, [tpl(1, 1, power=-1), tpl(1, m + 1, power=-1)]),
    )
    return Identity(f"durfee[n={n}]", lhs, euler_inverse(), "auxiliary", "Durfee rectangle identity")


def cao_wang(a: Rational, e: Rational) -> Identity:
    """Double sum at u = q^e equal to (-u q^a, -q/u, q^{a+1}; q^{a+1})_inf/(q;q)_inf."""
    a, e = as_rational(a), as_rational(e)
    A = [[1 + a, -a], [-a, 1 + a]]
    B = [e + (a - 1) / 2, -e - (a - 1) / 2]
    rhs = poch(pf(-1, a + e, a + 1), pf(-1, 1 - e, a + 1), pf(1, a + 1, a + 1), pf(1, 1, 1, -1))
    return Identity(
        f"cao-wang[a={a},u=q^{e}]", nahm(A, B), rhs, "auxiliary", "Cao-Wang double sum"
    )


def lee(e: int) -> Identity:
    """The Lebesgue-type single sum at z = q^e as a rank-2 Nahm sum."""
    return Identity(
        f"lee[z=q^{e}]",
        hyper(1, Fraction(1, 2), [tpl(-1, e + 1), tpl(1, 1, power=-1)]),
        nahm([[2, 1], [1, 1]], [1 + e, Fraction(1, 2)]),
        "auxiliary",
        "Lee's single-to-double sum transformation",
    )


def warnaar(k: int) -> Identity:
    size = k - 1
    A = [[min(i, j) for j in range(1, size + 1)] for i in range(1, size + 1)]
    half = Fraction(k, 2)
    rhs = poch(
        pf(-1, Fraction(1, 2)),
        pf(1, 1, 1, -1),
        pf(1, half, k + 1),
        pf(1, half + 1, k + 1),
        pf(1, k + 1, k + 1),
    )
    return Identity(f"warnaar[k={k}]", nahm(A, [0] * size), rhs, "auxiliary", "Warnaar's identity")


def _two_parameter_matrix(alpha: Fraction) -> list[list[Fraction]]:
    return [[alpha, 1 - alpha], [1 - alpha, alpha]]


def two_parameter_family(alpha: Rational, nu: Rational) -> Identity:
    """(-q^{a/2+a nu}, -q^{a/2-a nu}, q^a; q^a)_inf/(q;q)_inf for the two-parameter family."""
    alpha, nu = as_rational(alpha), as_rational(nu)
    rhs = poch(
        pf(-1, alpha / 2 + alpha * nu, alpha),
        pf(-1, alpha / 2 - alpha * nu, alpha),
        pf(1, alpha, alpha),
        pf(1, 1, 1, -1),
    )
    return Identity(
        f"twoparam[alpha={alpha},nu={nu}]",
        nahm(_two_parameter_matrix(alpha), [alpha * nu, -alpha * nu]),
        rhs,
        "proved-in-paper",
        "two-parameter family; a finite sample of alpha > 1/2 and rational nu",
        note="sampled family: the identity holds for every rational alpha > 1/2 and nu",
    )


def zagier_theta(alpha: Rational, nu: Rational) -> Identity:
    """Closed form q^{-1/24}/(q;q)_inf * sum over n in Z + nu of q^{alpha n^2/2}."""
    alpha, nu = as_rational(alpha), as_rational(nu)
    C = alpha * nu * nu / 2 - Fraction(1, 24)
    return Identity(
        f"zagier-theta[alpha={alpha},nu={nu}]",
        nahm(_two_parameter_matrix(alpha), [alpha * nu, -alpha * nu], C),
        prod(mono(1, Fraction(-1, 24)), euler_inverse(), ThetaNode(alpha, nu)),
        "auxiliary",
        "Zagier's theta-function form of the two-parameter family",
    )


def zagier_signed_theta(identity_id: str, B: Sequence[Rational], C: Rational, z_exp: Rational) -> Identity:
    """Nahm sum for A = [[4,1],[1,1]] as a signed theta series in q^10."""
    z_exp = as_rational(z_exp)
    rhs = prod(mono(1, C), euler_inverse(), subst(JTripleNode(Monomial(1, z_exp), "sum"), 10))
    return Identity(
        identity_id,
        nahm([[4, 1], [1, 1]], B, C),
        rhs,
        "auxiliary",
        "Zagier's theta-series form, n = 1, 3 mod 10",
    )
