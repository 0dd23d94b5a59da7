from __future__ import annotations

import logging
import math
import threading
from fractions import Fraction
from typing import Callable, Iterable, Sequence

from cachetools import LRUCache, cached

from .errors import ProductError
from .kernels import apply_binomial, canonical, unit_vector
from .models import GEtaList, JSpec, Monomial, PochFactor, Rational, as_rational
from .modularity import p2
from .series import PSeries, ceil_rational

logger = logging.getLogger(__name__)

_expansion_cache: LRUCache = LRUCache(maxsize=512)
_expansion_lock = threading.RLock()


class _Split:
    """A Pochhammer product rewritten as lam * q^shift * prod (1 - c q^e)^p with e > 0."""

    __slots__ = ("lam", "shift", "leading", "tails", "vanishes")

    def __init__(self) -> None:
        self.lam = Fraction(1)
        self.shift = Fraction(0)
        self.leading: list[tuple[Fraction, Fraction, int]] = []
        self.tails: list[tuple[PochFactor, int]] = []
        self.vanishes = False


def _split(factors: Iterable[PochFactor]) -> _Split:
    split = _Split()
    for f in factors:
        c = f.a.coeff
        if c == 0:
            continue
        k = 0
        while f.length is None or k < f.length:
            exp = f.a.exp + k * f.base
            if exp > 0:
                break
            if exp == 0:
                unit = 1 - c
                if unit == 0:
                    if f.power < 0:
                        raise ProductError("zero factor")
                    split.vanishes = True
                else:
                    split.lam *= unit**f.power
            else:
                # 1 - c q^e = -c q^e (1 - c^{-1} q^{-e})
                split.lam *= (-c) ** f.power
                split.shift += exp * f.power
                split.leading.append((1 / c, -exp, f.power))
            k += 1
        split.tails.append((f, k))
    return split


def product_valuation(factors: Sequence[PochFactor]) -> Fraction:
    """Exact least exponent of a Pochhammer product, ignoring vanishing."""
    return _split(factors).shift


def expand_product(factors: Sequence[PochFactor], order: Rational) -> PSeries:
    """Expand prod (a; q^m)_n^p over the given factors, truncated at order."""
    order = as_rational(order)
    split = _split(factors)
    if split.vanishes:
        return PSeries.zero(order)
    target = order - split.shift
    den = math.lcm(1, *(f.a.exp.denominator for f in factors), *(f.base.denominator for f in factors))
    length = ceil_rational(target * den)
    if length <= 0:
        return PSeries.zero(order)
    vec = unit_vector(length)
    for c, exp, power in split.leading:
        apply_binomial(vec, canonical(c), int(exp * den), power)
    for f, k in split.tails:
        c = canonical(f.a.coeff)
        while f.length is None or k < f.length:
            step = int((f.a.exp + k * f.base) * den)
            if step >= length:
                break
            apply_binomial(vec, c, step, f.power)
            k += 1
    vec *= canonical(split.lam)
    return PSeries.from_vector(den, order, int(split.shift * den), vec)


@cached(cache=_expansion_cache, lock=_expansion_lock)
def expand_product_cached(factors: tuple[PochFactor, ...], order: Fraction) -> PSeries:
    logger.debug("expanding %d Pochhammer factors to order %s", len(factors), order)
    return expand_product(factors, order)


def poch(f: PochFactor, order: Rational) -> PSeries:
    return expand_product([f], order)


def jspec_factors(spec: JSpec) -> list[PochFactor]:
    m, p = spec.modulus, spec.power
    full = PochFactor(Monomial(1, m), m, None, p)
    if spec.residue is None:
        return [full]
    a = spec.residue
    return [PochFactor(Monomial(1, a), m, None, p), PochFactor(Monomial(1, m - a), m, None, p), full]


def jquot(specs: Sequence[JSpec], prefactor: Monomial, order: Rational) -> PSeries:
    """prefactor * prod J-factors, truncated at order."""
    order = as_rational(order)
    if prefactor.coeff == 0:
        return PSeries.zero(order)
    factors = tuple(f for spec in specs for f in jspec_factors(spec))
    body = expand_product_cached(factors, order - prefactor.exp)
    return body.shift(prefactor.exp) * prefactor.coeff


def _convex_support(value: Callable[[int], Fraction], center: Fraction, order: Fraction) -> list[int]:
    """Integers n with value(n) < order, for value convex with minimum at center."""
    found = []
    n = math.floor(center)
    while True:
        if value(n) < order:
            found.append(n)
        elif n >= center:
            break
        n += 1
    n = math.floor(center) - 1
    while value(n) < order:
        found.append(n)
        n -= 1
    return found


def jacobi_triple_product(z: Monomial, order: Rational) -> PSeries:
    """(q, z, q/z; q)_inf."""
    if z.coeff == 0:
        raise ProductError("triple product argument must be nonzero")
    factors = [
        PochFactor(Monomial(1, 1)),
        PochFactor(z),
        PochFactor(Monomial(1 / z.coeff, 1 - z.exp)),
    ]
    return expand_product(factors, order)


def jacobi_triple_sum(z: Monomial, order: Rational) -> PSeries:
    """sum over n in Z of (-1)^n q^{n(n-1)/2} z^n."""
    order = as_rational(order)
    if z.coeff == 0:
        raise ProductError("triple product argument must be nonzero")
    sign = -z.coeff

    def exponent(n: int) -> Fraction:
        return Fraction(n * (n - 1), 2) + n * z.exp

    support = _convex_support(exponent, Fraction(1, 2) - z.exp, order)
    return PSeries.from_terms(((exponent(n), sign**n) for n in support), order)


def theta_sum(alpha: Rational, nu: Rational, order: Rational) -> PSeries:
    """sum over n in Z + nu of q^{alpha n^2 / 2}."""
    alpha, nu, order = as_rational(alpha), as_rational(nu), as_rational(order)
    if alpha <= 0:
        raise ProductError("divergent theta")

    def exponent(t: int) -> Fraction:
        return alpha * (t + nu) ** 2 / 2

    support = _convex_support(exponent, -nu, order)
    return PSeries.from_terms(((exponent(t), 1) for t in support), order)


def eta_classical(order: Rational) -> PSeries:
    order = as_rational(order)
    shift = Fraction(1, 24)
    return expand_product([PochFactor(Monomial(1, 1))], order - shift).shift(shift)


def _eta_factors(delta: int, g: int, r: Fraction) -> list[PochFactor]:
    if 2 * g == delta:
        return [PochFactor(Monomial(1, g), delta, None, int(2 * r))]
    return [
        PochFactor(Monomial(1, g), delta, None, int(r)),
        PochFactor(Monomial(1, delta - g), delta, None, int(r)),
    ]


def eta_gen(delta: int, g: int, order: Rational) -> PSeries:
    """Generalized eta with the two residue classes taken as a multiset."""
    order = as_rational(order)
    if not 0 < g < delta:
        raise ProductError(f"need 0 < g < delta, got g={g}, delta={delta}")
    prefactor = Fraction(delta, 2) * p2(Fraction(g, delta))
    factors = [
        PochFactor(Monomial(1, g), delta),
        PochFactor(Monomial(1, delta - g), delta),
    ]
    return expand_product(factors, order - prefactor).shift(prefactor)


def geta_expand(geta: GEtaList, order: Rational) -> PSeries:
    order = as_rational(order)
    prefactor = Fraction(0)
    factors: list[PochFactor] = []
    for f in geta.factors:
        if f.r == 0:
            continue
        if f.r.denominator != 1 and 2 * f.g != f.delta:
            raise ProductError(f"half-integer exponent on eta_({f.delta};{f.g})")
        prefactor += f.r * Fraction(f.delta, 2) * p2(Fraction(f.g, f.delta))
        factors.extend(_eta_factors(f.delta, f.g, f.r))
    return expand_product_cached(tuple(factors), order - prefactor).shift(prefactor)
