from fractions import Fraction

import pytest

from gsp4_local_zeta.sugano import PlaceData, SatakeData


@pytest.fixture
def symbolic_satake():
    return SatakeData.symbolic()


@pytest.fixture
def inert_place():
    return PlaceData.symbolic(-1)


@pytest.fixture
def split_place():
    return PlaceData.symbolic(1)


@pytest.fixture
def numeric_satake():
    return SatakeData.from_roots(Fraction(3, 4), Fraction(-2, 5), Fraction(7, 3))


@pytest.fixture
def numeric_inert():
    return PlaceData.from_values(9, -1)


@pytest.fixture
def numeric_split():
    return PlaceData.from_values(25, 1, Fraction(-5, 2))
