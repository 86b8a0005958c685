"""
Degree-five local L-factor of an unramified principal series and the local
zeta factors that normalize the integral.
"""
from dataclasses import dataclass
from typing import Dict, Iterator, Tuple

from gsp4_local_zeta.algebra import LaurentPoly, RationalFunction, VarId, var
from gsp4_local_zeta.sugano import P_PAIRS, PlaceData, SatakeData


T = var(VarId.T)


@dataclass(frozen=True)
class EigenvalueSet:
    """Eigenvalues of the Satake parameter in the 5-dimensional representation."""

    eigenvalues: Tuple[LaurentPoly, ...]

    def __iter__(self) -> Iterator[LaurentPoly]:
        return iter(self.eigenvalues)

    def __len__(self) -> int:
        return len(self.eigenvalues)

    def product(self) -> LaurentPoly:
        out = LaurentPoly.constant(1)
        for value in self.eigenvalues:
            out = out * value
        return out


def _check_twist(twist: int):
    if twist not in (1, -1):
        raise ValueError("twist must be +1 or -1, got {}".format(twist))


def eigenvalues(s: SatakeData) -> EigenvalueSet:
    return EigenvalueSet((LaurentPoly.constant(1), s.chi1, s.chi1.inverse(), s.chi2, s.chi2.inverse()))


def reciprocal_roots(s: SatakeData, twist: int = 1) -> Tuple[LaurentPoly, ...]:
    _check_twist(twist)
    return tuple(twist * value for value in eigenvalues(s))


def local_lfactor(s: SatakeData, twist: int = 1) -> RationalFunction:
    """prod over the eigenvalues of (1 - twist * lambda * t)^-1."""
    return RationalFunction.from_factored(1, [1 - root * T for root in reciprocal_roots(s, twist)])


def zeta_normalizer(p: PlaceData) -> RationalFunction:
    """zeta(s+1) zeta(2s) = ((1 - t/q)(1 - t^2))^-1."""
    return RationalFunction.from_factored(1, [1 - p.q.inverse() * T, 1 - T, 1 + T])


def gamma_pair_ratios(s: SatakeData) -> Dict[Tuple[int, int], LaurentPoly]:
    """gamma_i gamma_j / omega for the pairs in P(x), 1-based keys.

    Recomputed from the gamma dictionary: (1,4) gives chi_2, not chi_1."""
    gammas = s.gammas
    omega_inv = s.omega.inverse()
    return {(i + 1, j + 1): gammas[i] * gammas[j] * omega_inv for i, j in P_PAIRS}
