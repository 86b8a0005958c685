"""
Seeded exact parameter draws for the univariate and series checks.

Draws use random.Random(seed) (Mersenne Twister), so a seed fixes every
sample bit for bit.
"""
import logging
import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, List, Sequence

from gsp4_local_zeta import config
from gsp4_local_zeta.sugano import PlaceData, SatakeData


logger = logging.getLogger(__name__)

LEGENDRE_BY_CASE = {"inert": -1, "split": 1}


def format_rational(value) -> str:
    value = Fraction(value)
    return "{}/{}".format(value.numerator, value.denominator)


@dataclass(frozen=True)
class ParameterSample:
    satake: SatakeData
    place: PlaceData

    def params(self, prefix: str = "") -> Dict[str, str]:
        values = dict(self.satake.bindings())
        values.update(self.place.bindings())
        return {prefix + v.symbol: format_rational(x) for v, x in sorted(values.items())}


def sample_rational(rng: random.Random, bound: int = 9) -> Fraction:
    while True:
        num = rng.randint(-bound, bound)
        if num != 0:
            return Fraction(num, rng.randint(1, bound))


def sample_parameters(case: str, rng: random.Random, q_values: Sequence[int] = None,
                      degenerate: bool = False) -> ParameterSample:
    """One exact parameter set.

    With degenerate=True a split sample sits on nu(Pi_1) = nu(Pi_2) = +-omega^(1/2),
    where only the coset-sum oracle applies."""
    if case not in LEGENDRE_BY_CASE:
        raise ValueError("case must be 'inert' or 'split', got '{}'".format(case))
    if degenerate and case != "split":
        raise ValueError("degenerate samples only exist in the split case")
    q_values = q_values or config.default_q_values

    satake = SatakeData.from_roots(sample_rational(rng), sample_rational(rng), sample_rational(rng))
    q = rng.choice(list(q_values))
    if case == "inert":
        return ParameterSample(satake, PlaceData.from_values(q, -1))

    if degenerate:
        nu = rng.choice((1, -1)) * satake.sqrt_omega.constant_term()
        return ParameterSample(satake, PlaceData.from_values(q, 1, nu))

    omega = satake.omega.constant_term()
    while True:
        nu = sample_rational(rng)
        if nu * nu != omega:
            break
        logger.debug("rejected degenerate split sample nu=%s", nu)
    return ParameterSample(satake, PlaceData.from_values(q, 1, nu))


def sample_batch(case: str, seed: int, count: int, q_values: Sequence[int] = None,
                 degenerate: bool = False) -> List[ParameterSample]:
    if count < 1:
        raise ValueError("sample count must be positive, got {}".format(count))
    rng = random.Random(seed)
    return [sample_parameters(case, rng, q_values, degenerate) for _ in range(count)]
