from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Iterator

import numpy as np

from .errors import SeriesError
from .kernels import canonical, zeros
from .models import Monomial, Rational, as_rational


def ceil_rational(x: Fraction) -> int:
    return -((-x.numerator) // x.denominator)


def _readonly(vec: np.ndarray) -> np.ndarray:
    vec.flags.writeable = False
    return vec


_EMPTY = _readonly(zeros(0))


class PSeries:
    """Truncated Puiseux series in q with exact rational coefficients.

    ``coeffs[i]`` is the coefficient of q^{(start + i)/den}; every coefficient of
    q^e with e < order is known. The vector carries no leading or trailing
    zeros and ``den`` is the smallest lattice holding the stored exponents.
    """

    __slots__ = ("den", "order", "start", "coeffs")

    def __init__(self, den: int, order: Fraction, start: int, coeffs: np.ndarray) -> None:
        self.den = den
        self.order = order
        self.start = start
        self.coeffs = coeffs

    @classmethod
    def from_vector(cls, den: int, order: Rational, start: int, vector) -> PSeries:
        order = as_rational(order)
        vec = np.array(vector, dtype=object) if not isinstance(vector, np.ndarray) else vector
        upper = ceil_rational(order * den)
        if start + len(vec) > upper:
            vec = vec[: max(upper - start, 0)]
        nonzero = np.flatnonzero(vec != 0) if len(vec) else np.zeros(0, dtype=np.intp)
        if nonzero.size == 0:
            return cls.zero(order)
        first, last = int(nonzero[0]), int(nonzero[-1])
        vec = vec[first : last + 1]
        start += first
        g = math.gcd(den, start)
        if g > 1 and nonzero.size > 1:
            g = math.gcd(g, int(np.gcd.reduce(nonzero - first)))
        if g > 1:
            vec = vec[::g]
            start //= g
            den //= g
        return cls(den, order, start, _readonly(np.array([canonical(c) for c in vec], dtype=object)))

    @classmethod
    def from_terms(cls, terms: Iterable[tuple[Rational, Rational]], order: Rational) -> PSeries:
        order = as_rational(order)
        collected: dict[Fraction, Fraction] = {}
        for exp, coeff in terms:
            exp = as_rational(exp)
            if exp < order:
                collected[exp] = collected.get(exp, Fraction(0)) + as_rational(coeff)
        collected = {e: c for e, c in collected.items() if c != 0}
        if not collected:
            return cls.zero(order)
        den = math.lcm(*(e.denominator for e in collected))
        lo = min(int(e * den) for e in collected)
        hi = max(int(e * den) for e in collected)
        vec = zeros(hi - lo + 1)
        for exp, coeff in collected.items():
            vec[int(exp * den) - lo] = coeff
        return cls.from_vector(den, order, lo, vec)

    @classmethod
    def zero(cls, order: Rational) -> PSeries:
        return cls(1, as_rational(order), 0, _EMPTY)

    @classmethod
    def one(cls, order: Rational) -> PSeries:
        return ps_from_monomial(Monomial(1, 0), order)

    def is_zero(self) -> bool:
        return len(self.coeffs) == 0

    def valuation(self) -> Fraction:
        """Least exponent with a nonzero coefficient, or the order if none is known."""
        if self.is_zero():
            return self.order
        return Fraction(self.start, self.den)

    def items(self) -> Iterator[tuple[Fraction, Fraction | int]]:
        for i, c in enumerate(self.coeffs):
            if c != 0:
                yield Fraction(self.start + i, self.den), c

    def to_dict(self) -> dict[Fraction, Fraction]:
        return {e: Fraction(c) for e, c in self.items()}

    def on_lattice(self, den: int) -> tuple[int, np.ndarray]:
        factor = den // self.den
        if factor * self.den != den:
            raise SeriesError(f"lattice 1/{den} does not refine 1/{self.den}")
        if factor == 1 or self.is_zero():
            return self.start * factor, self.coeffs
        out = zeros((len(self.coeffs) - 1) * factor + 1)
        out[::factor] = self.coeffs
        return self.start * factor, out

    def dense(self, den: int, lo: int, length: int) -> np.ndarray:
        """Copy of the coefficients of q^{k/den} for k = lo .. lo+length-1."""
        out = zeros(length)
        if self.is_zero():
            return out
        start, vec = self.on_lattice(den)
        a, b = max(start, lo), min(start + len(vec), lo + length)
        if a < b:
            out[a - lo : b - lo] = vec[a - start : b - start]
        return out

    def coeff(self, exp: Rational) -> Fraction:
        return ps_coeff(self, exp)

    def truncated(self, order: Rational) -> PSeries:
        order = as_rational(order)
        if order > self.order:
            raise SeriesError(f"insufficient truncation: requested {order}, known to {self.order}")
        return PSeries.from_vector(self.den, order, self.start, self.coeffs)

    def shift(self, exp: Rational) -> PSeries:
        """Exact multiplication by q^exp."""
        exp = as_rational(exp)
        if self.is_zero():
            return PSeries.zero(self.order + exp)
        den = math.lcm(self.den, exp.denominator)
        start, vec = self.on_lattice(den)
        return PSeries.from_vector(den, self.order + exp, start + int(exp * den), vec)

    def __add__(self, other: PSeries) -> PSeries:
        return ps_add(self, other)

    def __sub__(self, other: PSeries) -> PSeries:
        return ps_add(self, ps_neg(other))

    def __neg__(self) -> PSeries:
        return ps_neg(self)

    def __mul__(self, other: PSeries | Rational) -> PSeries:
        if isinstance(other, PSeries):
            return ps_mul(self, other)
        return ps_scale(self, other)

    __rmul__ = __mul__

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, PSeries):
            return NotImplemented
        return (
            self.den == other.den
            and self.order == other.order
            and self.start == other.start
            and list(self.coeffs) == list(other.coeffs)
        )

    __hash__ = None

    def __repr__(self) -> str:
        from .formatters import format_series

        return f"PSeries({format_series(self)} + O(q^{self.order}))"


@dataclass(frozen=True, slots=True)
class Comparison:
    equal: bool
    order: Fraction
    exponent: Fraction | None = None
    left: Fraction | None = None
    right: Fraction | None = None


def ps_from_monomial(m: Monomial, order: Rational) -> PSeries:
    order = as_rational(order)
    if m.coeff == 0 or m.exp >= order:
        return PSeries.zero(order)
    return PSeries.from_vector(m.exp.denominator, order, m.exp.numerator, [m.coeff])


def ps_add(a: PSeries, b: PSeries) -> PSeries:
    den = math.lcm(a.den, b.den)
    order = min(a.order, b.order)
    parts = [p.on_lattice(den) for p in (a, b) if not p.is_zero()]
    if not parts:
        return PSeries.zero(order)
    lo = min(start for start, _ in parts)
    hi = min(ceil_rational(order * den), max(start + len(vec) for start, vec in parts))
    if hi <= lo:
        return PSeries.zero(order)
    out = zeros(hi - lo)
    for start, vec in parts:
        segment = vec[: max(hi - start, 0)]
        out[start - lo : start - lo + len(segment)] += segment
    return PSeries.from_vector(den, order, lo, out)


def ps_neg(a: PSeries) -> PSeries:
    return ps_scale(a, -1)


def ps_scale(a: PSeries, c: Rational) -> PSeries:
    c = as_rational(c)
    if c == 0 or a.is_zero():
        return PSeries.zero(a.order)
    return PSeries.from_vector(a.den, a.order, a.start, a.coeffs * canonical(c))


def ps_mul(a: PSeries, b: PSeries) -> PSeries:
    order = min(a.order + b.valuation(), b.order + a.valuation())
    if a.is_zero() or b.is_zero():
        return PSeries.zero(order)
    den = math.lcm(a.den, b.den)
    sa, va = a.on_lattice(den)
    sb, vb = b.on_lattice(den)
    start = sa + sb
    length = ceil_rational(order * den) - start
    if length <= 0:
        return PSeries.zero(order)
    if np.count_nonzero(va != 0) > np.count_nonzero(vb != 0):
        va, vb = vb, va
    va, vb = va[:length], vb[:length]
    out = zeros(length)
    for i in np.flatnonzero(va != 0):
        i = int(i)
        span = min(len(vb), length - i)
        out[i : i + span] += va[i] * vb[:span]
    return PSeries.from_vector(den, order, start, out)


def ps_inv(a: PSeries) -> PSeries:
    if a.is_zero():
        raise SeriesError("non-invertible series")
    order = a.order - 2 * a.valuation()
    start = -a.start
    n = ceil_rational(order * a.den) - start
    if n <= 0:
        return PSeries.zero(order)
    vec = a.coeffs[:n]
    lead_inv = canonical(1 / Fraction(vec[0]))
    out = zeros(n)
    out[0] = lead_inv
    support = np.flatnonzero(vec != 0)
    support = support[support > 0]
    values = vec[support]
    for m in range(1, n):
        cut = int(np.searchsorted(support, m, side="right"))
        if cut:
            out[m] = -lead_inv * (values[:cut] * out[m - support[:cut]]).sum()
    return PSeries.from_vector(a.den, order, start, out)


def ps_subst_power(a: PSeries, k: Rational) -> PSeries:
    """Formal substitution q -> q^k."""
    k = as_rational(k)
    if k <= 0:
        raise SeriesError(f"substitution power must be positive, got {k}")
    if a.is_zero():
        return PSeries.zero(a.order * k)
    stride = k.numerator
    out = zeros((len(a.coeffs) - 1) * stride + 1)
    out[::stride] = a.coeffs
    return PSeries.from_vector(a.den * k.denominator, a.order * k, a.start * stride, out)


def ps_coeff(a: PSeries, exp: Rational) -> Fraction:
    exp = as_rational(exp)
    if exp >= a.order:
        raise SeriesError(f"beyond truncation: q^{exp} with series known below q^{a.order}")
    k = exp * a.den
    if k.denominator != 1:
        return Fraction(0)
    index = k.numerator - a.start
    if 0 <= index < len(a.coeffs):
        return Fraction(a.coeffs[index])
    return Fraction(0)


def ps_eq_upto(a: PSeries, b: PSeries, order: Rational) -> Comparison:
    order = as_rational(order)
    if order > a.order or order > b.order:
        raise SeriesError(
            f"insufficient truncation: comparing to {order}, known to {min(a.order, b.order)}"
        )
    diff = ps_add(a, ps_neg(b)).truncated(order)
    if diff.is_zero():
        return Comparison(True, order)
    exp = diff.valuation()
    return Comparison(False, order, exp, a.coeff(exp), b.coeff(exp))


def ps_dissect(a: PSeries, m: int) -> list[PSeries]:
    """Components F_j with a(q) = sum_j q^j F_j(q^m)."""
    if m < 1:
        raise SeriesError(f"dissection modulus must be positive, got {m}")
    if a.den != 1:
        raise SeriesError("non-integral exponents")
    components = []
    for j in range(m):
        order = Fraction(ceil_rational((a.order - j) / m))
        if a.is_zero():
            components.append(PSeries.zero(order))
            continue
        offset = (j - a.start) % m
        sub = a.coeffs[offset::m]
        components.append(PSeries.from_vector(1, order, (a.start + offset - j) // m, sub))
    return components
