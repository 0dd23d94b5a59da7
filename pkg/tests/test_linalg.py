from fractions import Fraction

import pytest

from nahm_qseries.linalg import is_positive_definite, quadratic_minimum, to_fraction, to_sympy


@pytest.mark.parametrize(
    "matrix, expected",
    [
        ([[2]], True),
        ([[Fraction(1, 2)]], True),
        ([[4, 1], [1, 1]], True),
        ([[1, 1], [1, 1]], False),
        ([[1, 2], [2, 1]], False),
        ([[Fraction(1, 3), Fraction(-1, 3)], [Fraction(-1, 3), Fraction(4, 3)]], True),
        ([], True),
    ],
)
def test_positive_definite(matrix, expected):
    assert is_positive_definite(matrix) is expected


def test_rational_round_trip():
    assert to_fraction(to_sympy(Fraction(-5, 84))) == Fraction(-5, 84)
    assert isinstance(to_fraction(to_sympy(3)), Fraction)


def test_quadratic_minimum():
    center, value, diagonal = quadratic_minimum([[4, 1], [1, 1]], [0, Fraction(1, 2)])
    # Q^{-1} = [[1/3, -1/3], [-1/3, 4/3]]
    assert center == [Fraction(1, 6), Fraction(-2, 3)]
    assert value == Fraction(1, 3)
    assert diagonal == [Fraction(1, 3), Fraction(4, 3)]


def test_singular_form_has_no_minimum():
    with pytest.raises(ZeroDivisionError):
        quadratic_minimum([[1, 1], [1, 1]], [0, 0])
