import pytest

from gsp4_local_zeta.cosets import (CosetWeight, FiniteRingElt, SplitConvention, coset_weight, delta_P,
                                    furusawa_index, index_bruteforce, index_formula, inert_representatives,
                                    split_representatives)
from gsp4_local_zeta.hilbert import classify_place

from tests.helpers import R, T


def test_finite_ring():
    x = FiniteRingElt(5, 7)
    assert (x + 4).value == 2
    assert (3 * x).value == 1
    assert (x ** 6).value == 1
    assert (x - x).is_zero()
    assert FiniteRingElt(10, 9).reduce(3).value == 1
    with pytest.raises(ValueError):
        x.reduce(3)
    with pytest.raises(ValueError):
        x + FiniteRingElt(1, 5)


@pytest.mark.parametrize("p, rho", [(3, 2), (3, 7), (5, 2), (5, 11), (7, 3), (7, 2)])
@pytest.mark.parametrize("m", [1, 2, 3])
def test_index_count_matches_formula(p, rho, m):
    legendre_E = classify_place(rho, p)
    assert index_bruteforce(p, rho, m) == index_formula(p, legendre_E, m)


@pytest.mark.parametrize("p, rho, m", [(3, 2, 2), (5, 11, 1), (3, 7, 2)])
def test_engines_agree(p, rho, m):
    assert index_bruteforce(p, rho, m, engine="python") == index_bruteforce(p, rho, m, engine="numpy")


def test_index_validation():
    with pytest.raises(ValueError):
        index_bruteforce(2, 3, 1)
    with pytest.raises(ValueError):
        index_bruteforce(5, 10, 1)
    with pytest.raises(ValueError):
        index_bruteforce(5, 2, 0)
    with pytest.raises(ValueError):
        index_bruteforce(5, 2, 1, engine="gpu")


def test_furusawa_index():
    assert furusawa_index(9, -1, 0) == 1
    assert furusawa_index(9, -1, 1) == 10
    assert furusawa_index(9, 1, 3) == 81 * 8
    assert furusawa_index(R ** 2, -1, 2) == R ** 4 + R ** 2
    assert furusawa_index(R ** 2, 1, 0) == 1
    with pytest.raises(ValueError):
        furusawa_index(9, 1, -1)


def test_delta_P():
    assert delta_P(1, 1) == 0
    assert delta_P(2, 1) == 3


def test_coset_weight():
    w = coset_weight("split", 1, 1, 1)
    assert w == CosetWeight(section_s=-4, section_const=-4, weil_exponent=-4, chi_T_power=4, volume_exponent=12)
    assert w.t_power == 4
    assert w.q_exponent == 4
    assert w.scalar(R, -1) == R ** 8
    assert coset_weight("inert", 0, 1).scalar(R, -1) == -R ** 2
    with pytest.raises(ValueError):
        coset_weight("inert", 0, 0, 1)
    with pytest.raises(ValueError):
        coset_weight("ramified", 0, 0)


def test_representatives():
    assert inert_representatives(2) == [(0, 0), (0, 1), (0, 2), (1, 0)]
    assert split_representatives(1) == [(1, 0, 0, 1), (2, 0, 0, 0), (2, 0, 0, 1), (2, 0, 1, 0)]
    assert len(split_representatives(1, SplitConvention.UNIFORM)) == 6
    assert len(split_representatives(3, "uniform")) > len(split_representatives(3, "proof"))
    for i, n, m, k in split_representatives(6):
        assert 2 * n + m + k <= 6


def test_section_weight_follows_modulus_character():
    for n in range(3):
        for m in range(3):
            w = coset_weight("inert", n, m)
            assert 3 * w.section_s == -delta_P(2 * n + m, 0)
            assert w.section_const == w.section_s


def test_inert_weights_give_the_coset_monomials():
    # index * volume * section * Weil = (1 + 1/q)^[m > 0] q^(2n(1-s)) q^(m(2-s)) chi_T(p)^m
    q = R ** 2
    for n in range(5):
        for m in range(5):
            w = coset_weight("inert", n, m)
            weight = furusawa_index(q, -1, m) * w.scalar(R, -1) * T ** w.t_power
            monomial = q ** (2 * n) * T ** (2 * n) * q ** (2 * m) * T ** m * (-1) ** m
            if m > 0:
                monomial = (1 + q ** -1) * monomial
            assert weight == monomial, (n, m)


def test_numpy_engine_accepts_huge_rho():
    rho = 2 + 5 * 2 ** 70
    assert index_bruteforce(5, rho, 2) == index_formula(5, -1, 2)
    assert index_bruteforce(5, -rho, 1, engine="python") == index_formula(5, classify_place(-rho, 5), 1)
