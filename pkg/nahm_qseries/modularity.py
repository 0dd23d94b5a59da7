"""Robins' sufficient criterion for generalized eta-products and level bookkeeping."""
from __future__ import annotations

import itertools
import logging
import math
import re
from collections import defaultdict
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .errors import ExpressionParseError, InconsistentResidualsError, ModularityError
from .models import (
    GEtaFactor,
    GEtaList,
    JSpec,
    ModularityReport,
    Monomial,
    Rational,
    ScalingResult,
    as_rational,
)

logger = logging.getLogger(__name__)

JTerm = tuple[Sequence[JSpec], Monomial]


def p2(t: Rational) -> Fraction:
    t = as_rational(t)
    frac = t - math.floor(t)
    return frac * frac - frac + Fraction(1, 6)


def is_even_integer(x: Fraction) -> bool:
    return x.denominator == 1 and x.numerator % 2 == 0


def robins_check(geta: GEtaList) -> ModularityReport:
    valinf = sum(
        (f.delta * p2(Fraction(f.g, f.delta)) * f.r for f in geta.factors), Fraction(0)
    )
    val0 = sum(
        (Fraction(geta.level, f.delta) * Fraction(1, 6) * f.r for f in geta.factors), Fraction(0)
    )
    return ModularityReport(valinf, val0, is_even_integer(valinf) and is_even_integer(val0))


def _least_even_multiplier(x: Fraction) -> int:
    for k in itertools.count(1):
        if is_even_integer(k * x):
            return k
    raise AssertionError("unreachable")


def find_scaling(geta: GEtaList) -> ScalingResult:
    report = robins_check(geta)
    k = _least_even_multiplier(report.valinf)
    n0 = _least_even_multiplier(report.val0)
    return ScalingResult(k, n0, k * n0 * geta.level)


def geta_scale(geta: GEtaList, k: int) -> GEtaList:
    if k < 1:
        raise ModularityError(f"scaling factor must be a positive integer, got {k}")
    return GEtaList(
        geta.level * k,
        tuple(GEtaFactor(f.delta * k, f.g * k, f.r) for f in geta.factors),
    )


def geta_from_jquot(
    specs: Sequence[JSpec], prefactor: Monomial, level: int
) -> tuple[GEtaList, Fraction]:
    """Rewrite prefactor * prod J as q^rho * (generalized eta-product at level N).

    Every J_m is first taken to level N as J_N times eta_{N;g} factors with
    m | g; the conversion succeeds when the J_N powers cancel.
    """
    exponents: dict[tuple[int, int], Fraction] = defaultdict(Fraction)
    rho = prefactor.exp
    classical = 0
    for spec in specs:
        m, p = spec.modulus, spec.power
        if level % m:
            raise ModularityError(f"J modulus {m} does not divide level {level}")
        if spec.residue is not None:
            a = spec.residue
            exponents[(m, min(a, m - a))] += p
            rho -= Fraction(m, 2) * p2(Fraction(a, m)) * p
        for g in range(m, level, m):
            if 2 * g < level:
                exponents[(level, g)] += p
                rho -= Fraction(level, 2) * p2(Fraction(g, level)) * p
        if level % 2 == 0 and (level // 2) % m == 0:
            exponents[(level, level // 2)] += Fraction(p, 2)
            rho -= Fraction(level, 4) * p2(Fraction(1, 2)) * p
        classical += p
    if classical != 0:
        raise ModularityError("not a generalized eta-product at this level")
    factors = tuple(
        GEtaFactor(delta, g, r) for (delta, g), r in sorted(exponents.items()) if r != 0
    )
    return GEtaList(level, factors), rho


def jterm_level(terms: Sequence[JTerm]) -> int:
    return math.lcm(1, *(spec.modulus for specs, _ in terms for spec in specs))


def common_C(terms: Sequence[JTerm], q_scale: int = 1, level: int | None = None) -> Fraction:
    """The constant C making q^C * (each term at q -> q^{1/q_scale}) an eta-product."""
    level = level or jterm_level(terms)
    residuals = [geta_from_jquot(specs, pre, level)[1] for specs, pre in terms]
    if len(set(residuals)) > 1:
        raise InconsistentResidualsError(residuals)
    if not residuals:
        raise ModularityError("no terms given")
    return -residuals[0] / q_scale


@dataclass(frozen=True, slots=True)
class LevelReport:
    C: Fraction
    k: int
    level: int
    lists: tuple[GEtaList, ...]
    scalings: tuple[ScalingResult, ...]


def nahm_level(terms: Sequence[JTerm], C: Rational, q_scale: int = 1) -> LevelReport:
    """Level on which f(q^k) is certified, with f(q^{q_scale}) = sum of the J-terms.

    k is the least multiple of q_scale clearing the denominator of C.
    """
    C = as_rational(C)
    k = math.lcm(C.denominator, q_scale)
    t = k // q_scale
    scaled = [
        ([spec.scaled(t) for spec in specs], Monomial(pre.coeff, pre.exp * t))
        for specs, pre in terms
    ]
    level = jterm_level(scaled)
    lists = []
    for specs, pre in scaled:
        geta, rho = geta_from_jquot(specs, pre, level)
        if rho + k * C != 0:
            raise InconsistentResidualsError([rho, -k * C])
        lists.append(geta)
    scalings = [find_scaling(geta) for geta in lists]
    big_k = math.lcm(*(s.k for s in scalings))
    combined = math.lcm(*((big_k // s.k) * s.level for s in scalings))
    logger.debug("level pipeline: C=%s k=%d level=%d", C, k * big_k, combined)
    return LevelReport(C, k * big_k, combined, tuple(lists), tuple(scalings))


_TOKEN_RE = re.compile(r"\s*(?:(\[)|(\])|(,)|(-?\d+(?:/\d+)?))")


def parse_geta(text: str, level: int | None = None) -> GEtaList:
    """Parse the bracket syntax [[delta,g,r],...]; level defaults to lcm of the deltas."""
    tokens: list[tuple[str, int]] = []
    pos = 0
    while pos < len(text):
        if text[pos:].strip() == "":
            break
        match = _TOKEN_RE.match(text, pos)
        if match is None:
            raise ExpressionParseError(f"unexpected character {text[pos]!r}", 1, pos + 1)
        tokens.append((match.group(match.lastindex), match.start(match.lastindex) + 1))
        pos = match.end()
    triples: list[tuple[int, int, Fraction]] = []
    index = 0

    def expect(symbol: str | None) -> str:
        nonlocal index
        if index >= len(tokens):
            raise ExpressionParseError("unexpected end of geta-list", 1, len(text) + 1)
        value, column = tokens[index]
        if symbol is not None and value != symbol:
            raise ExpressionParseError(f"expected {symbol!r}, found {value!r}", 1, column)
        if symbol is None and value in "[],":
            raise ExpressionParseError(f"expected a number, found {value!r}", 1, column)
        index += 1
        return value

    expect("[")
    while index < len(tokens) and tokens[index][0] == "[":
        expect("[")
        delta = Fraction(expect(None))
        expect(",")
        g = Fraction(expect(None))
        expect(",")
        r = Fraction(expect(None))
        expect("]")
        if delta.denominator != 1 or g.denominator != 1:
            raise ExpressionParseError("delta and g must be integers", 1, tokens[index - 1][1])
        triples.append((int(delta), int(g), r))
        if index < len(tokens) and tokens[index][0] == ",":
            expect(",")
    expect("]")
    if index != len(tokens):
        raise ExpressionParseError("trailing input after geta-list", 1, tokens[index][1])
    if level is None:
        level = math.lcm(1, *(delta for delta, _, _ in triples))
    return GEtaList(level, tuple(GEtaFactor(d, g, r) for d, g, r in triples))


def format_geta(geta: GEtaList) -> str:
    return "[" + ",".join(f"[{f.delta},{f.g},{f.r}]" for f in geta.factors) + "]"
