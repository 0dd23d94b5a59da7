"""Exact rational matrix helpers backed by sympy."""
from __future__ import annotations

from fractions import Fraction
from typing import Sequence

import sympy as sp

Matrix = Sequence[Sequence[Fraction]]


def to_sympy(value) -> sp.Rational:
    value = Fraction(value)
    return sp.Rational(value.numerator, value.denominator)


def to_fraction(value) -> Fraction:
    value = sp.Rational(value)
    return Fraction(int(value.p), int(value.q))


def rational_matrix(matrix: Matrix) -> sp.Matrix:
    return sp.Matrix([[to_sympy(x) for x in row] for row in matrix])


def column(vector: Sequence[Fraction]) -> sp.Matrix:
    return sp.Matrix([to_sympy(x) for x in vector])


def is_positive_definite(matrix: Matrix) -> bool:
    if not len(matrix):
        return True
    return bool(rational_matrix(matrix).is_positive_definite)


def quadratic_minimum(Q: Matrix, L: Sequence[Fraction]) -> tuple[list[Fraction], Fraction, list[Fraction]]:
    """Minimizer -Q^{-1}L of x.Qx/2 + L.x, the value L.Q^{-1}L and the diagonal of Q^{-1}."""
    q = rational_matrix(Q)
    if q.det() == 0:
        raise ZeroDivisionError("singular matrix")
    q_inv = q.inv()
    lin = column(L)
    center = [-to_fraction(x) for x in q_inv * lin]
    value = to_fraction((lin.T * q_inv * lin)[0, 0])
    return center, value, [to_fraction(q_inv[i, i]) for i in range(q.rows)]
