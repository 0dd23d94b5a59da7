from fractions import Fraction

import numpy as np
import pytest

from nahm_qseries.catalog import corpus_index, jquot_terms
from nahm_qseries.errors import ProductError
from nahm_qseries.models import GEtaFactor, GEtaList, HyperSum, JSpec, Monomial, PochFactor, PochTemplate
from nahm_qseries.modularity import geta_from_jquot, geta_scale, jterm_level
from nahm_qseries.nahm import hyper_sum
from nahm_qseries.products import (
    eta_classical,
    eta_gen,
    expand_product,
    geta_expand,
    jacobi_triple_product,
    jacobi_triple_sum,
    jquot,
    poch,
    product_valuation,
    theta_sum,
)
from nahm_qseries.series import PSeries, ps_eq_upto, ps_subst_power

PARTITIONS = [1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42, 56, 77, 101, 135]


def q_poch(c=1, e=1, base=1, length=None, power=1):
    return PochFactor(Monomial(c, e), base, length, power)


def test_euler_pentagonal_theorem():
    expected = PSeries.from_terms(
        [(0, 1), (1, -1), (2, -1), (5, 1), (7, 1), (12, -1), (15, -1)], 20
    )
    assert expand_product([q_poch()], 20) == expected


def test_partition_generating_function():
    inverse = expand_product([q_poch(power=-1)], len(PARTITIONS))
    assert [inverse.coeff(n) for n in range(len(PARTITIONS))] == PARTITIONS


def test_euler_distinct_parts_equal_odd_parts():
    distinct = expand_product([q_poch(c=-1)], 40)
    odd = expand_product([q_poch(base=2, power=-1)], 40)
    assert ps_eq_upto(distinct, odd, 40).equal


def test_finite_pochhammer():
    assert poch(q_poch(length=2), 10).to_dict() == {
        Fraction(0): 1,
        Fraction(1): -1,
        Fraction(2): -1,
        Fraction(3): 1,
    }
    assert poch(q_poch(length=0), 10) == PSeries.one(10)


def test_zero_exponent_factor_vanishes_or_raises():
    assert expand_product([q_poch(e=0)], 10).is_zero()
    with pytest.raises(ProductError, match="zero factor"):
        expand_product([q_poch(e=0, power=-1)], 10)


def test_constant_factor_scales():
    # (2;q)_1 = 1 - 2
    assert expand_product([q_poch(c=2, e=0, length=1)], 5).to_dict() == {Fraction(0): -1}


def test_negative_exponent_factor():
    f = q_poch(c=-1, e=-1, length=1)
    assert product_valuation([f]) == -1
    assert expand_product([f], 5).to_dict() == {Fraction(-1): 1, Fraction(0): 1}


@pytest.mark.parametrize(
    "z",
    [
        Monomial(1, Fraction(1, 3)),
        Monomial(-1, 0),
        Monomial(2, 1),
        Monomial(1, Fraction(-3, 2)),
    ],
)
def test_jacobi_triple_product_equals_its_sum(z):
    assert ps_eq_upto(jacobi_triple_product(z, 30), jacobi_triple_sum(z, 30), 30).equal


def test_triple_product_rejects_zero_argument():
    with pytest.raises(ProductError):
        jacobi_triple_product(Monomial(0, 1), 5)


def test_theta_sum():
    assert theta_sum(2, 0, 10).to_dict() == {
        Fraction(0): 1,
        Fraction(1): 2,
        Fraction(4): 2,
        Fraction(9): 2,
    }
    half = theta_sum(1, Fraction(1, 2), 5)
    assert half.to_dict() == {Fraction(1, 8): 2, Fraction(9, 8): 2, Fraction(25, 8): 2}


def test_theta_sum_diverges_for_nonpositive_alpha():
    with pytest.raises(ProductError, match="divergent theta"):
        theta_sum(0, 0, 5)


def test_jquot_with_prefactor():
    s = jquot([JSpec(1)], Monomial(2, 1), 10)
    assert s.order == 10
    assert s.to_dict() == {Fraction(1): 2, Fraction(2): -2, Fraction(3): -2, Fraction(6): 2, Fraction(8): 2}


def test_jquot_zero_prefactor():
    assert jquot([JSpec(1)], Monomial(0, 0), 10).is_zero()


def test_residue_j_is_jacobi_triple_product():
    # J_{1,3} = (q, q^2, q^3; q^3) = sum (-1)^n q^{n(3n-1)/2} = (q;q)_inf
    assert ps_eq_upto(jquot([JSpec(3, 1)], Monomial(), 30), expand_product([q_poch()], 30), 30).equal


def test_classical_eta_prefactor():
    eta = eta_classical(5)
    assert eta.valuation() == Fraction(1, 24)
    assert eta.coeff(Fraction(25, 24)) == -1


def test_generalized_eta_prefactor_and_body():
    # eta_{5;1} = q^{(5/2) P2(1/5)} (q, q^4; q^5)_inf and (5/2) P2(1/5) = 1/60
    eta = eta_gen(5, 1, 3)
    assert eta.valuation() == Fraction(1, 60)
    assert eta.coeff(Fraction(61, 60)) == -1


def test_geta_expand_half_exponent_on_middle_class():
    # eta_{2;1}^{1/2} = q^{-1/24} (q; q^2)_inf
    geta = GEtaList(2, (GEtaFactor(2, 1, Fraction(1, 2)),))
    expected = expand_product([q_poch(base=2)], 10 + Fraction(1, 24)).shift(Fraction(-1, 24))
    assert ps_eq_upto(geta_expand(geta, 10), expected, 10).equal


def test_eta_gen_rejects_bad_residue():
    with pytest.raises(ProductError):
        eta_gen(4, 4, 5)


def test_geta_expand_skips_zero_exponents():
    padded = GEtaList(10, (GEtaFactor(5, 2, 0), GEtaFactor(10, 1, 1)))
    plain = GEtaList(10, (GEtaFactor(10, 1, 1),))
    assert geta_expand(padded, 30) == geta_expand(plain, 30)


ETA_CLASSES = [(delta, g) for delta in range(2, 13) for g in range(1, delta)]


@pytest.mark.parametrize("delta, g", ETA_CLASSES)
def test_eta_gen_scales_with_its_arguments(delta, g):
    order = 15
    for k in range(1, 5):
        scaled = ps_subst_power(eta_gen(delta, g, Fraction(order, k)), k)
        assert ps_eq_upto(eta_gen(k * delta, k * g, order), scaled, order).equal, (delta, g, k)


def random_geta(rng):
    level = int(rng.choice([4, 6, 8, 10, 12]))
    classes = [(delta, g) for delta in range(2, level + 1) if level % delta == 0 for g in range(1, delta)]
    picks = rng.choice(len(classes), size=int(rng.integers(1, 4)), replace=False)
    factors = tuple(
        GEtaFactor(*classes[i], int(rng.choice([-2, -1, 1, 2]))) for i in sorted(picks)
    )
    return GEtaList(level, factors)


def test_geta_scale_matches_substitution():
    rng = np.random.default_rng(20240612)
    order = 12
    for _ in range(25):
        geta = random_geta(rng)
        k = int(rng.integers(1, 4))
        expected = ps_subst_power(geta_expand(geta, Fraction(order, k)), k)
        assert ps_eq_upto(geta_expand(geta_scale(geta, k), order), expected, order).equal, (geta, k)


PRODUCT_SIDES = ["exam7-1", "exam7-2", "exam7-3", "exam8-1", "exam8-2", "exam8-3", "exam9-1", "exam9-2", "exam9-3"]


@pytest.mark.parametrize("identity_id", PRODUCT_SIDES)
def test_jquot_terms_agree_with_their_eta_products(identity_id):
    order = 100
    terms = jquot_terms(corpus_index()[identity_id].rhs)
    level = jterm_level(terms)
    for specs, prefactor in terms:
        geta, rho = geta_from_jquot(specs, prefactor, level)
        expected = geta_expand(geta, order - rho).shift(rho) * prefactor.coeff
        assert ps_eq_upto(jquot(specs, prefactor, order), expected, order).equal, specs


Q_FACTORIAL_INVERSE = PochTemplate(Monomial(1, 1), 1, 1, 0, -1)
COEFFICIENTS = [Fraction(-2), Fraction(-1), Fraction(1, 2), Fraction(2), Fraction(3), Fraction(-1, 3)]


def test_euler_identities_for_random_arguments():
    rng = np.random.default_rng(20240613)
    order = 10
    for _ in range(20):
        z = Monomial(COEFFICIENTS[rng.integers(0, len(COEFFICIENTS))], Fraction(int(rng.integers(1, 7)), 3))
        first = HyperSum(0, z=z, factors=(Q_FACTORIAL_INVERSE,))
        second = HyperSum(1, Fraction(-1, 2), z=z, alternating=True, factors=(Q_FACTORIAL_INVERSE,))
        inverse = expand_product([PochFactor(z, 1, None, -1)], order)
        direct = expand_product([PochFactor(z)], order)
        assert ps_eq_upto(hyper_sum(first, order), inverse, order).equal, z
        assert ps_eq_upto(hyper_sum(second, order), direct, order).equal, z


def test_triple_product_for_random_arguments():
    rng = np.random.default_rng(20240614)
    order = 8
    coefficients = [c for c in COEFFICIENTS if c != 1]
    for _ in range(50):
        c = coefficients[rng.integers(0, len(coefficients))]
        z = Monomial(c, Fraction(int(rng.integers(-4, 7)), 2))
        assert ps_eq_upto(jacobi_triple_product(z, order), jacobi_triple_sum(z, order), order).equal, z
