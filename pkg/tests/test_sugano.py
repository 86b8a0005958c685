import random
from fractions import Fraction

import pytest

from gsp4_local_zeta.algebra import VarId, rf_equal
from gsp4_local_zeta.errors import RamifiedPlace
from gsp4_local_zeta.sampling import sample_parameters
from gsp4_local_zeta.sugano import (CosetRep, PlaceData, SatakeData, bessel_coeff, bessel_coeff_iterated,
                                    bessel_table, build_params, sugano_C, sugano_Q)

from tests.helpers import A, B, C, R, U


def test_satake_dictionary(symbolic_satake):
    g1, g2, g3, g4 = symbolic_satake.gammas
    assert g1 == A ** 2 * B ** 2 * C
    assert g2 == A ** 2 * C
    assert g3 == C
    assert g4 == B ** 2 * C
    assert symbolic_satake.omega == A ** 2 * B ** 2 * C ** 2
    assert symbolic_satake.sqrt_omega == A * B * C
    assert symbolic_satake.central_relation()


def test_satake_validation():
    with pytest.raises(ValueError):
        SatakeData.from_characters(0, 1, 1)
    with pytest.raises(ValueError):
        SatakeData(1, 4, 9, 3, 3)
    s = SatakeData.from_characters(1, 2, Fraction(9, 4))
    assert s.sqrt_chi1 is None
    assert s.sqrt_chi2 == Fraction(3, 2)
    with pytest.raises(ValueError):
        s.sqrt_omega


def test_place_validation():
    with pytest.raises(ValueError):
        PlaceData.from_values(5, -1)
    with pytest.raises(ValueError):
        PlaceData.from_values(9, 1)
    with pytest.raises(ValueError):
        PlaceData.from_values(9, 2)
    assert PlaceData.from_values(49, -1).q == 49


def test_coset_rep():
    assert CosetRep(ell=1, m=2).h_diagonal() == (5, 3, 0, 2)
    with pytest.raises(ValueError):
        CosetRep(ell=-1, m=0)


def test_params_inert_symbolic(symbolic_satake, inert_place):
    params = build_params(symbolic_satake, inert_place)
    assert params.A1 == R ** -2
    assert params.A4 == R ** -4
    assert params.A5 == 0
    assert params.A2 == R ** -4 * symbolic_satake.omega


def test_params_split_symbolic(symbolic_satake, split_place):
    params = build_params(symbolic_satake, split_place)
    assert params.A4 == -R ** -4
    assert params.A5 == R ** -4 * (U + A ** 2 * B ** 2 * C ** 2 * U ** -1)


def test_params_trivial_characters():
    params = build_params(SatakeData.from_characters(1, 1, 1), PlaceData.from_values(9, -1))
    assert params.alpha == Fraction(4, 27)
    assert params.beta == Fraction(6, 729)
    assert params.A3 == Fraction(1, 729)


def test_ramified_place_is_rejected(symbolic_satake):
    with pytest.raises(RamifiedPlace):
        build_params(symbolic_satake, PlaceData(0, 3))


@pytest.mark.parametrize("legendre_E", [-1, 1])
def test_generating_function_shape(symbolic_satake, legendre_E):
    C_xy = sugano_C(symbolic_satake, PlaceData.symbolic(legendre_E))
    assert C_xy.den.degree(VarId.X) == 4
    assert C_xy.den.degree(VarId.Y) == 4
    assert rf_equal(C_xy.specialize({VarId.X: 0, VarId.Y: 0}), 1)


@pytest.mark.parametrize("legendre_E", [-1, 1])
def test_first_coefficients(symbolic_satake, legendre_E):
    place = PlaceData.symbolic(legendre_E)
    params = build_params(symbolic_satake, place)
    assert rf_equal(bessel_coeff(symbolic_satake, place, CosetRep(0, 0)), 1)
    assert rf_equal(bessel_coeff(symbolic_satake, place, CosetRep(1, 0)), params.alpha - params.A5)


def test_generating_function_denominator_q(numeric_satake, numeric_inert):
    assert sugano_Q(numeric_satake, numeric_inert).degree(VarId.Y) == 4


@pytest.mark.parametrize("case", ["inert", "split"])
def test_normalization_on_samples(case):
    rng = random.Random(3)
    for _ in range(10):
        sample = sample_parameters(case, rng)
        assert rf_equal(bessel_coeff(sample.satake, sample.place, CosetRep(0, 0)), 1)


@pytest.mark.parametrize("case", ["inert", "split"])
def test_two_route_extraction(case):
    sample = sample_parameters(case, random.Random(11))
    table = bessel_table(sample.satake, sample.place, 4, 4)
    for ell in range(5):
        for m in range(5 - ell):
            iterated = bessel_coeff_iterated(sample.satake, sample.place, CosetRep(ell, m))
            assert rf_equal(table[(ell, m)], iterated), (ell, m)


@pytest.mark.parametrize("legendre_E", [-1, 1])
def test_weyl_symmetry(symbolic_satake, legendre_E):
    C_xy = sugano_C(symbolic_satake, PlaceData.symbolic(legendre_E))
    swapped = C_xy.substitute({VarId.A: B, VarId.B: A})
    assert rf_equal(C_xy, swapped)
    assert rf_equal(C_xy, sugano_C(symbolic_satake.swapped(), PlaceData.symbolic(legendre_E)))


def test_specialization_coherence(symbolic_satake, numeric_satake, numeric_split):
    symbolic = sugano_C(symbolic_satake, PlaceData.symbolic(1))
    values = dict(numeric_satake.bindings())
    values.update(numeric_split.bindings())
    assert rf_equal(symbolic.specialize(values), sugano_C(numeric_satake, numeric_split))
