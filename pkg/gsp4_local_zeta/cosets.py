"""
Finite-ring laboratory for the coset combinatorics of the unramified integral.

H = {x + y sqrt(rho)} is the unit group of O_E; H^m is the subgroup with
y = 0 mod p^m.  Reduction mod p^m is surjective with kernel inside H^m, so
[H(O) : H^m(O)] is the index of the images in (O/p^m)^2 and can be counted.
"""
import logging
from dataclasses import dataclass
from enum import Enum
from typing import List, Tuple

import numpy as np
from sympy import isprime

from gsp4_local_zeta.algebra import LaurentPoly


logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class FiniteRingElt:
    """An element of Z / modulus."""

    value: int
    modulus: int

    def __post_init__(self):
        if self.modulus < 1:
            raise ValueError("modulus must be positive: {}".format(self.modulus))
        object.__setattr__(self, "value", self.value % self.modulus)

    def _other(self, other) -> int:
        if isinstance(other, FiniteRingElt):
            if other.modulus != self.modulus:
                raise ValueError("moduli differ: {} and {}".format(self.modulus, other.modulus))
            return other.value
        return int(other)

    def __add__(self, other) -> "FiniteRingElt":
        return FiniteRingElt(self.value + self._other(other), self.modulus)

    __radd__ = __add__

    def __sub__(self, other) -> "FiniteRingElt":
        return FiniteRingElt(self.value - self._other(other), self.modulus)

    def __mul__(self, other) -> "FiniteRingElt":
        return FiniteRingElt(self.value * self._other(other), self.modulus)

    __rmul__ = __mul__

    def __pow__(self, exponent: int) -> "FiniteRingElt":
        return FiniteRingElt(pow(self.value, exponent, self.modulus), self.modulus)

    def is_zero(self) -> bool:
        return self.value == 0

    def reduce(self, modulus: int) -> "FiniteRingElt":
        if self.modulus % modulus:
            raise ValueError("{} does not divide {}".format(modulus, self.modulus))
        return FiniteRingElt(self.value, modulus)


def _check_index_args(p: int, rho: int, m: int):
    if p == 2 or not isprime(p):
        raise ValueError("p must be an odd prime, got {}".format(p))
    if rho % p == 0:
        raise ValueError("rho must be a unit mod {}, got {}".format(p, rho))
    if m < 1:
        raise ValueError("m must be positive, got {}".format(m))


def _count_numpy(p: int, rho: int, m: int) -> Tuple[int, int]:
    modulus = p ** m
    rho %= p
    r = np.arange(modulus, dtype=np.int64) % p
    # units mod p^m are exactly the classes that are units mod p
    norms = (r[:, None] ** 2 - rho * r[None, :] ** 2) % p
    units = norms != 0
    return int(np.count_nonzero(units)), int(np.count_nonzero(units[:, 0]))


def _count_python(p: int, rho: int, m: int) -> Tuple[int, int]:
    modulus = p ** m
    total = 0
    base = 0
    for x in range(modulus):
        ex = FiniteRingElt(x, modulus)
        for y in range(modulus):
            ey = FiniteRingElt(y, modulus)
            norm = ex ** 2 - rho * ey ** 2
            if not norm.reduce(p).is_zero():
                total += 1
                if ey.is_zero():
                    base += 1
    return total, base


_ENGINES = {"numpy": _count_numpy, "python": _count_python}


def index_bruteforce(p: int, rho: int, m: int, engine: str = "numpy") -> int:
    """[H(O) : H^m(O)] by counting norm-unit pairs mod p^m."""
    _check_index_args(p, rho, m)
    if engine not in _ENGINES:
        raise ValueError("unknown engine '{}', expected one of {}".format(engine, sorted(_ENGINES)))

    total, base = _ENGINES[engine](p, rho, m)
    logger.debug("index count p=%d rho=%d m=%d: %d / %d", p, rho, m, total, base)
    if base == 0 or total % base:
        raise ArithmeticError("{} pairs do not split into cosets of {}".format(total, base))
    return total // base


def index_formula(q: int, legendre_E: int, m: int) -> int:
    return q ** (m - 1) * (q - legendre_E)


def furusawa_index(q, legendre_E: int, m: int):
    """[H(O) : H^m(O)], 1 for m = 0 and q^(m-1) (q - (E/v)) otherwise.

    q may be an integer or a Laurent polynomial such as r^2."""
    if m < 0:
        raise ValueError("m must be nonnegative, got {}".format(m))
    if m == 0:
        return LaurentPoly.constant(1) if isinstance(q, LaurentPoly) else 1
    return q ** (m - 1) * (q - legendre_E)


def delta_P(det_power: int, lambda_power: int) -> int:
    """Modulus character of the Siegel parabolic as an exponent of |p| = q^-1."""
    return 3 * det_power - 3 * lambda_power


@dataclass(frozen=True)
class CosetWeight:
    """q-exponents carried by one coset of the integrand.

    With d = 2n + m + k the section contributes q^(-d(s+1)), the Weil
    representation q^-d times chi_T(p)^d and the volume q^(6n + 3m + 3k)."""

    section_s: int
    section_const: int
    weil_exponent: int
    chi_T_power: int
    volume_exponent: int

    @property
    def t_power(self) -> int:
        return -self.section_s

    @property
    def q_exponent(self) -> int:
        return self.section_const + self.weil_exponent + self.volume_exponent

    def scalar(self, sqrt_q: LaurentPoly, chi_T: int) -> LaurentPoly:
        """Everything except t^d, as a Laurent polynomial in sqrt(q)."""
        return sqrt_q ** (2 * self.q_exponent) * chi_T ** self.chi_T_power


def coset_weight(case: str, n: int, m: int, k: int = 0) -> CosetWeight:
    if case not in ("inert", "split"):
        raise ValueError("case must be 'inert' or 'split', got '{}'".format(case))
    if min(n, m, k) < 0:
        raise ValueError("coset indices must be nonnegative: ({}, {}, {})".format(n, m, k))
    if case == "inert" and k != 0:
        raise ValueError("inert cosets have k = 0")

    d = 2 * n + m + k
    # f(h, s) = delta_P(h)^((s+1)/3) with det h = p^d and lambda(h) = 1
    section = delta_P(d, 0) // 3
    return CosetWeight(
        section_s=-section,
        section_const=-section,
        weil_exponent=-d,
        chi_T_power=d,
        volume_exponent=6 * n + 3 * m + 3 * k,
    )


class SplitConvention(str, Enum):
    # i = 2 carries k = 0, i = 1 starts at k = 1
    PROOF = "proof"
    # both i = 1, 2 start at k = 0
    UNIFORM = "uniform"


def inert_representatives(order: int) -> List[Tuple[int, int]]:
    """(n, m) with 2n + m <= order."""
    return [(n, m) for n in range(order // 2 + 1) for m in range(order - 2 * n + 1)]


def split_representatives(order: int, convention: SplitConvention = SplitConvention.PROOF) -> List[Tuple[int, int, int, int]]:
    """(i, n, m, k) with 2n + m + k <= order under the given enumeration."""
    convention = SplitConvention(convention)
    reps = []
    for i in (1, 2):
        k_start = 1 if (i == 1 and convention is SplitConvention.PROOF) else 0
        for n in range(order // 2 + 1):
            for m in range(order - 2 * n + 1):
                for k in range(k_start, order - 2 * n - m + 1):
                    reps.append((i, n, m, k))
    return reps
