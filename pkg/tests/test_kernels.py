from fractions import Fraction

import pytest

from nahm_qseries.kernels import (
    apply_binomial,
    canonical,
    divide_binomial,
    multiply_binomial,
    unit_vector,
)


def test_canonical_turns_integral_fractions_into_ints():
    assert canonical(Fraction(4, 2)) == 2
    assert isinstance(canonical(Fraction(4, 2)), int)
    assert canonical(Fraction(1, 2)) == Fraction(1, 2)


def test_multiply_binomial_uses_original_values():
    vec = unit_vector(5)
    multiply_binomial(vec, 1, 1)
    multiply_binomial(vec, 1, 1)
    assert list(vec) == [1, -2, 1, 0, 0]


def test_divide_binomial_geometric_series_with_step():
    vec = unit_vector(7)
    divide_binomial(vec, 1, 2)
    assert list(vec) == [1, 0, 1, 0, 1, 0, 1]


def test_divide_binomial_weighted():
    vec = unit_vector(4)
    divide_binomial(vec, 2, 1)
    assert list(vec) == [1, 2, 4, 8]

    vec = unit_vector(4)
    divide_binomial(vec, Fraction(-1, 2), 1)
    assert list(vec) == [1, Fraction(-1, 2), Fraction(1, 4), Fraction(-1, 8)]


def test_apply_binomial_inverse_powers_cancel():
    vec = unit_vector(10)
    vec[3] = 5
    original = list(vec)
    apply_binomial(vec, 3, 2, 2)
    apply_binomial(vec, 3, 2, -2)
    assert list(vec) == original


def test_step_beyond_length_is_a_no_op():
    vec = unit_vector(3)
    multiply_binomial(vec, 1, 3)
    divide_binomial(vec, 1, 5)
    assert list(vec) == [1, 0, 0]


@pytest.mark.parametrize("kernel", [multiply_binomial, divide_binomial])
def test_nonpositive_step_rejected(kernel):
    with pytest.raises(ValueError):
        kernel(unit_vector(3), 1, 0)
