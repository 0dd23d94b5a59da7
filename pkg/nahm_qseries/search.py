"""Recognize single infinite products from a q-expansion by peeling (1 - q^n) factors."""
from __future__ import annotations

import logging
from fractions import Fraction
from typing import Sequence

from .errors import SeriesError
from .kernels import apply_binomial, canonical
from .models import FitResult, JSpec, Monomial, PochFactor, Rational, as_rational
from .products import expand_product
from .series import PSeries, ceil_rational

logger = logging.getLogger(__name__)

DEFAULT_GUARD = 64
DEFAULT_PERIODS = 2


def jquot_exponents(specs: Sequence[JSpec], modulus: int) -> dict[int, int]:
    """Exponent of (1 - q^n) for each residue n = 1..modulus in a J-quotient."""
    pattern = {n: 0 for n in range(1, modulus + 1)}
    for spec in specs:
        m = spec.modulus
        if modulus % m:
            raise SeriesError(f"J modulus {m} does not divide {modulus}")
        residues = [0] if spec.residue is None else [spec.residue, m - spec.residue, 0]
        for n in pattern:
            pattern[n] += spec.power * sum(1 for a in residues if n % m == a)
    return pattern


def residue_pattern(exponents: dict[int, int], modulus: int) -> dict[int, int]:
    return {n: exponents.get(n, 0) for n in range(1, modulus + 1)}


def stabilization_index(exponents: dict[int, int], modulus: int, window: int) -> int:
    """Least n0 with e_n = e_{n+modulus} for every n0 <= n <= window - modulus."""
    for n in range(window - modulus, 0, -1):
        if exponents.get(n, 0) != exponents.get(n + modulus, 0):
            return n + 1
    return 1


def _jquot_form(pattern: dict[int, int], modulus: int) -> tuple[JSpec, ...] | None:
    if any(pattern[r] != pattern[modulus - r] for r in range(1, modulus)):
        return None
    specs = []
    classical = pattern[modulus]
    for r in range(1, (modulus + 1) // 2):
        if pattern[r]:
            specs.append(JSpec(modulus, r, pattern[r]))
            classical -= pattern[r]
    if modulus % 2 == 0 and modulus > 1 and pattern[modulus // 2]:
        specs.append(JSpec(modulus // 2, None, pattern[modulus // 2]))
        classical -= pattern[modulus // 2]
    if classical:
        specs.append(JSpec(modulus, None, classical))
    return tuple(specs)


def fit_product(
    series: PSeries,
    modulus: int,
    order: Rational | None = None,
    *,
    guard: int = DEFAULT_GUARD,
    periods: int = DEFAULT_PERIODS,
) -> FitResult | None:
    """Write series as scalar * q^v * prod (1 - q^n)^{e_n} with e_n eventually periodic mod modulus.

    The periodic stretch must cover `periods` full periods of the window. A J-quotient
    form is attached only when the pattern holds from n = 1.

    Returns None when no such product is found within the truncation window.
    """
    if modulus < 1:
        raise SeriesError(f"modulus must be positive, got {modulus}")
    if series.is_zero():
        raise SeriesError("cannot fit the zero series")
    if series.den != 1:
        raise SeriesError("non-integral lattice")
    order = series.order if order is None else min(as_rational(order), series.order)
    valuation = series.valuation()
    scalar = Fraction(series.coeffs[0])
    known = ceil_rational(order - valuation)
    if known - 1 < periods * modulus:
        raise SeriesError(
            f"order {order} too low to read {periods} periods of {modulus} past q^{valuation}"
        )
    quotient = series.dense(1, series.start, known) * canonical(1 / scalar)

    exponents: dict[int, int] = {}
    for n in range(1, known):
        deviation = Fraction(quotient[n])
        if deviation.denominator != 1:
            logger.debug("fit stopped at q^%d: non-integral coefficient %s", n, deviation)
            return None
        e = -deviation.numerator
        if abs(e) > guard:
            logger.debug("fit stopped at q^%d: exponent %d beyond guard", n, e)
            return None
        if e:
            exponents[n] = e
            apply_binomial(quotient, 1, n, -e)

    window = known - 1
    stable_from = stabilization_index(exponents, modulus, window)
    if window - stable_from + 1 < periods * modulus:
        logger.debug("fit stopped: exponents mod %d only stable from n=%d of %d", modulus, stable_from, window)
        return None
    form = _jquot_form(residue_pattern(exponents, modulus), modulus) if stable_from == 1 else None
    return FitResult(scalar, valuation, exponents, modulus, form, stable_from)


def expand_fit(fit: FitResult, order: Rational) -> PSeries:
    order = as_rational(order)
    factors = [PochFactor(Monomial(1, n), 1, 1, e) for n, e in sorted(fit.exponents.items())]
    body = expand_product(factors, order - fit.q_power)
    return body.shift(fit.q_power) * fit.scalar


def describe_fit(fit: FitResult | None) -> str:
    if fit is None:
        return "no representation found within window"
    from .formatters import format_jquot

    if fit.jquot_form is None:
        return (
            f"{fit.scalar} * q^{fit.q_power} * product with period {fit.modulus}"
            f" from n={fit.stable_from} (not a J-quotient)"
        )
    return format_jquot(fit.jquot_form, Monomial(fit.scalar, fit.q_power))
