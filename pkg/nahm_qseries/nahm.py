"""Nahm sums, multi-sums with per-index Pochhammer denominators, and single hypergeometric sums."""
from __future__ import annotations

import logging
import math
from collections import defaultdict
from fractions import Fraction

import numpy as np

from .errors import NahmError
from .kernels import divide_binomial, unit_vector, zeros
from .linalg import is_positive_definite, quadratic_minimum
from .models import HyperSum, Monomial, MultiSum, NahmTriple, PochFactor, Rational, as_rational
from .products import expand_product, product_valuation
from .series import PSeries, ceil_rational, ps_from_monomial

logger = logging.getLogger(__name__)


def lattice_denominator(s: MultiSum) -> int:
    """Least D with D * (exponent of every term) integral, denominators included."""
    parts = [s.c.denominator]
    for i, row in enumerate(s.Q):
        parts.append((row[i] / 2).denominator)
        parts.extend(x.denominator for j, x in enumerate(row) if j != i)
    parts.extend(x.denominator for x in s.L)
    parts.extend(x.denominator for x in s.d)
    return math.lcm(*parts)


def _ellipsoid_ranges(s: MultiSum, order: Fraction) -> list[range] | None:
    center, value, diagonal = quadratic_minimum(s.Q, s.L)
    radius = order - s.c + value / 2
    if radius < 0:
        return None
    ranges = []
    for i, c in enumerate(center):
        spread = math.isqrt(ceil_rational(2 * radius * diagonal[i])) + 1
        lo = max(0, math.floor(c - spread))
        hi = math.ceil(c + spread)
        if hi < lo:
            return None
        ranges.append(range(lo, hi + 1))
    return ranges


def _separable_ranges(s: MultiSum, order: Fraction) -> list[range] | None:
    """Per-coordinate bounds for a nonnegative form; cross terms only raise exponents."""
    lows = []
    for i in range(s.rank):
        a, b = s.Q[i][i] / 2, s.L[i]
        vertex = max(0, math.floor(-b / (2 * a)))
        lows.append(min(a * n * n + b * n for n in (vertex, vertex + 1)))
    ranges = []
    for i in range(s.rank):
        a, b = s.Q[i][i] / 2, s.L[i]
        budget = order - s.c - (sum(lows) - lows[i])
        n = max(0, math.floor(-b / (2 * a)))
        while a * n * n + b * n < budget:
            n += 1
        ranges.append(range(0, n + 1))
    return ranges


def coordinate_ranges(s: MultiSum, order: Fraction) -> list[range] | None:
    if is_positive_definite(s.Q):
        return _ellipsoid_ranges(s, order)
    nonnegative = all(x >= 0 for row in s.Q for x in row)
    if nonnegative and all(s.Q[i][i] > 0 for i in range(s.rank)):
        return _separable_ranges(s, order)
    raise NahmError("quadratic form is neither positive definite nor nonnegative")


def _lattice_points(s: MultiSum, den: int, ranges: list[range], cutoff: int) -> tuple[np.ndarray, np.ndarray]:
    grids = np.meshgrid(*(np.arange(r.start, r.stop, dtype=np.int64) for r in ranges), indexing="ij")
    points = np.stack([g.reshape(-1) for g in grids], axis=1)
    quad = np.array([[int(x * den) for x in row] for row in s.Q], dtype=np.int64)
    lin = np.array([int(2 * x * den) for x in s.L], dtype=np.int64)
    twice = np.einsum("pi,ij,pj->p", points, quad, points) + points @ lin + int(2 * s.c * den)
    exponents = twice // 2
    keep = exponents < cutoff
    return points[keep], exponents[keep]


def multi_sum(s: MultiSum, order: Rational) -> PSeries:
    order = as_rational(order)
    if s.rank == 0:
        return ps_from_monomial(Monomial(1, s.c), order)
    ranges = coordinate_ranges(s, order)
    if ranges is None:
        return PSeries.zero(order)
    den = lattice_denominator(s)
    cutoff = ceil_rational(order * den)
    points, exponents = _lattice_points(s, den, ranges, cutoff)
    if len(exponents) == 0:
        return PSeries.zero(order)
    offset = int(exponents.min())
    length = cutoff - offset
    logger.debug("multi-sum rank %d: %d lattice points on 1/%d", s.rank, len(points), den)

    steps = [int(d * den) for d in s.d]
    last_max = int(points[:, -1].max())
    tails = [unit_vector(length)]
    for n in range(1, last_max + 1):
        vec = tails[-1].copy()
        divide_binomial(vec, 1, n * steps[-1])
        tails.append(vec)

    groups: dict[tuple[int, ...], list[tuple[int, int]]] = defaultdict(list)
    for point, exponent in zip(points.tolist(), exponents.tolist()):
        groups[tuple(point[:-1])].append((point[-1], exponent - offset))

    total = zeros(length)
    for prefix, members in groups.items():
        acc = zeros(length)
        for n_last, shift in members:
            acc[shift:] += tails[n_last][: length - shift]
        for i, n_i in enumerate(prefix):
            for t in range(1, n_i + 1):
                divide_binomial(acc, 1, t * steps[i])
        total += acc
    return PSeries.from_vector(den, order, offset, total)


def nahm_sum(t: NahmTriple, order: Rational) -> PSeries:
    """f_{A,B,C}(q) truncated at order."""
    if not t.is_definite():
        raise NahmError("not a Nahm matrix")
    return multi_sum(t.as_multi_sum(), order)


def hyper_sum(h: HyperSum, order: Rational) -> PSeries:
    order = as_rational(order)
    if not h.terminates():
        raise NahmError("divergent hypergeometric sum")
    linear = h.beta + h.z.exp
    worst = sum(
        (
            product_valuation([PochFactor(t.a, t.base, None, 1)])
            for t in h.factors
            if t.power > 0 and t.l > 0
        ),
        Fraction(0),
    )
    worst += sum(
        (product_valuation([t.at(0)]) for t in h.factors if t.power > 0 and t.l == 0),
        Fraction(0),
    )
    vertex = -linear / h.alpha if h.alpha > 0 else Fraction(0)
    total = PSeries.zero(order)
    n = 0
    while True:
        exponent = h.alpha * n * n / 2 + linear * n + h.gamma
        if exponent + worst >= order and n >= vertex:
            break
        coeff = h.z.coeff**n * (-1 if h.alternating and n % 2 else 1)
        if coeff != 0:
            term = expand_product([t.at(n) for t in h.factors], order - exponent)
            total = total + term.shift(exponent) * coeff
        n += 1
    logger.debug("hypergeometric sum: %d terms below q^%s", n, order)
    return total
