import pytest

from gsp4_local_zeta import config


def test_parse_q_values():
    assert config.parse_q_values("9, 25,,49") == (9, 25, 49)
    with pytest.raises(ValueError):
        config.parse_q_values("8")
    with pytest.raises(ValueError):
        config.parse_q_values(" , ")
    with pytest.raises(ValueError):
        config.parse_q_values("nine")


@pytest.mark.parametrize("q, expected", [(4, True), (9, True), (16, True), (81, True), (36, False), (1, False),
                                         (27, False), (0, False)])
def test_square_of_prime_power(q, expected):
    assert config.is_square_of_prime_power(q) == expected


def test_defaults():
    assert config.default_q_values == (4, 9, 25, 49)
    assert config.default_order >= 0


def test_term_limit():
    previous = config.set_term_limit(5)
    try:
        assert config.term_limit() == 5
        with pytest.raises(ValueError):
            config.set_term_limit(0)
    finally:
        config.set_term_limit(previous)
    assert config.term_limit() == previous
