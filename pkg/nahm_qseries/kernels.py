"""In-place kernels on dense object-dtype coefficient vectors.

A vector ``v`` holds the coefficients of q^{k/D} for k = 0 .. len(v)-1 on a
fixed lattice; every kernel keeps that lattice and length.
"""
from __future__ import annotations

from fractions import Fraction

import numpy as np


def canonical(value):
    if isinstance(value, Fraction) and value.denominator == 1:
        return value.numerator
    return value


def zeros(length: int) -> np.ndarray:
    return np.zeros(max(length, 0), dtype=object)


def unit_vector(length: int) -> np.ndarray:
    vec = zeros(length)
    if length > 0:
        vec[0] = 1
    return vec


def multiply_binomial(vec: np.ndarray, c, step: int) -> None:
    """vec <- vec * (1 - c q^step)."""
    if step <= 0:
        raise ValueError("binomial step must be positive")
    if c == 0 or step >= len(vec):
        return
    vec[step:] = vec[step:] - c * vec[:-step]


def divide_binomial(vec: np.ndarray, c, step: int) -> None:
    """vec <- vec / (1 - c q^step), as a blockwise running sum."""
    if step <= 0:
        raise ValueError("binomial step must be positive")
    n = len(vec)
    if c == 0 or step >= n:
        return
    blocks = -(-n // step)
    grid = zeros(blocks * step)
    grid[:n] = vec
    grid = grid.reshape(blocks, step)
    if c == 1:
        grid = np.cumsum(grid, axis=0)
    else:
        c = canonical(Fraction(c))
        c_inv = canonical(1 / Fraction(c))
        weights = np.array([c**j for j in range(blocks)], dtype=object).reshape(-1, 1)
        inverse_weights = np.array([c_inv**j for j in range(blocks)], dtype=object).reshape(-1, 1)
        grid = np.cumsum(grid * inverse_weights, axis=0) * weights
    vec[:] = grid.reshape(-1)[:n]


def apply_binomial(vec: np.ndarray, c, step: int, power: int) -> None:
    """vec <- vec * (1 - c q^step)^power for a nonzero integer power."""
    kernel = multiply_binomial if power > 0 else divide_binomial
    for _ in range(abs(power)):
        kernel(vec, c, step)
