import random
from fractions import Fraction

import pytest

from gsp4_local_zeta.sampling import format_rational, sample_batch, sample_parameters, sample_rational


def test_format_rational():
    assert format_rational(3) == "3/1"
    assert format_rational(Fraction(-4, 6)) == "-2/3"


def test_sample_rational_is_nonzero_and_bounded():
    rng = random.Random(0)
    for _ in range(200):
        x = sample_rational(rng, bound=3)
        assert x != 0
        assert abs(x.numerator) <= 3


def test_batches_are_deterministic():
    first = [s.params() for s in sample_batch("split", 42, 5)]
    second = [s.params() for s in sample_batch("split", 42, 5)]
    assert first == second
    assert first != [s.params() for s in sample_batch("split", 43, 5)]


@pytest.mark.parametrize("case, legendre_E", [("inert", -1), ("split", 1)])
def test_samples_fit_the_case(case, legendre_E):
    for sample in sample_batch(case, 1, 30, q_values=(9, 49)):
        assert sample.place.legendre_E == legendre_E
        assert sample.place.q in (9, 49)
        if case == "split":
            assert sample.place.nu_pi1 ** 2 != sample.satake.omega


def test_params_prefix():
    sample = sample_parameters("split", random.Random(4))
    params = sample.params("sample2.")
    assert sorted(params) == ["sample2.a", "sample2.b", "sample2.c", "sample2.r", "sample2.u"]


def test_bad_arguments():
    with pytest.raises(ValueError):
        sample_batch("inert", 0, 0)
    with pytest.raises(ValueError):
        sample_parameters("ramified", random.Random(0))


def test_degenerate_split_samples():
    for sample in sample_batch("split", 8, 10, degenerate=True):
        assert sample.place.nu_pi1 ** 2 == sample.satake.omega
        assert sample.place.nu_pi2(sample.satake) == sample.place.nu_pi1
    with pytest.raises(ValueError):
        sample_batch("inert", 8, 1, degenerate=True)
