"""
Local quadratic characters over Q: Legendre symbols, Hilbert symbols at the
primes and at the real place, the inert/split/ramified type of Q_p(sqrt(rho))
and the character chi_T(a) = (a, rho)_v attached to T = diag(1, -rho).
"""
import itertools
import logging
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Optional, Tuple

from sympy import factorint, isprime, multiplicity

from gsp4_local_zeta.errors import ZeroArgument


logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class LocalPlace:
    """A prime p, or the real place when p is None."""

    p: Optional[int] = None

    def __post_init__(self):
        if self.p is not None and not isprime(self.p):
            raise ValueError("not a prime: {}".format(self.p))

    @classmethod
    def real(cls) -> "LocalPlace":
        return cls(None)

    @classmethod
    def finite(cls, p: int) -> "LocalPlace":
        return cls(int(p))

    @classmethod
    def parse(cls, text: str) -> "LocalPlace":
        text = text.strip().lower()
        if text in ("real", "inf", "infinity", "oo"):
            return cls.real()
        return cls.finite(int(text))

    @property
    def is_real(self) -> bool:
        return self.p is None

    def __str__(self) -> str:
        return "real" if self.p is None else str(self.p)


@dataclass(frozen=True)
class QuadSpaceData:
    """T = diag(1, -rho); the discriminant field is E = Q(sqrt(rho))."""

    rho: Fraction

    def __post_init__(self):
        object.__setattr__(self, "rho", Fraction(self.rho))
        if self.rho == 0:
            raise ValueError("rho must be nonzero")

    @property
    def minus_detT(self) -> Fraction:
        return self.rho

    def norm(self, x, y) -> Fraction:
        return Fraction(x) ** 2 - self.rho * Fraction(y) ** 2


def legendre(a: int, p: int) -> int:
    """Euler's criterion, a^((p-1)/2) mod p."""
    if p == 2 or not isprime(p):
        raise ValueError("legendre symbol needs an odd prime, got {}".format(p))
    a %= p
    if a == 0:
        return 0
    return 1 if pow(a, (p - 1) // 2, p) == 1 else -1


def split_valuation(x: Fraction, p: int) -> Tuple[int, Fraction]:
    """x = p^v * u with u a p-adic unit."""
    x = Fraction(x)
    if x == 0:
        raise ZeroArgument("valuation of zero")
    v = multiplicity(p, abs(x.numerator)) - multiplicity(p, x.denominator)
    return v, x / Fraction(p) ** v


def _residue(u: Fraction, modulus: int) -> int:
    return u.numerator * pow(u.denominator, -1, modulus) % modulus


def _unit_legendre(u: Fraction, p: int) -> int:
    # (n/d) has the class of n*d modulo squares
    return legendre(u.numerator * u.denominator, p)


def _epsilon(u8: int) -> int:
    return ((u8 - 1) // 2) % 2


def _omega(u8: int) -> int:
    return ((u8 * u8 - 1) // 8) % 2


def hilbert_symbol(a, b, v: LocalPlace) -> int:
    a, b = Fraction(a), Fraction(b)
    if a == 0 or b == 0:
        raise ZeroArgument("hilbert symbol of ({}, {})".format(a, b))
    if v.is_real:
        return -1 if a < 0 and b < 0 else 1

    p = v.p
    alpha, u = split_valuation(a, p)
    beta, w = split_valuation(b, p)
    if p == 2:
        u8, w8 = _residue(u, 8), _residue(w, 8)
        e = _epsilon(u8) * _epsilon(w8) + alpha * _omega(w8) + beta * _omega(u8)
        return -1 if e % 2 else 1

    result = -1 if (alpha * beta * ((p - 1) // 2)) % 2 else 1
    if beta % 2:
        result *= _unit_legendre(u, p)
    if alpha % 2:
        result *= _unit_legendre(w, p)
    return result


def squarefree_part(x) -> int:
    """The squarefree integer in the square class of a nonzero rational."""
    x = Fraction(x)
    if x == 0:
        raise ZeroArgument("square class of zero")
    n = abs(x.numerator * x.denominator)
    core = 1
    for prime, exp in factorint(n).items():
        if exp % 2:
            core *= prime
    return core if x > 0 else -core


def _vp(n: int, p: int) -> int:
    return multiplicity(p, abs(n)) if n else 10 ** 9


@lru_cache(maxsize=None)
def _solvable(a: int, b: int, p: int, k: int) -> bool:
    def form(z, x, y):
        return z * z - a * x * x - b * y * y

    def hensel(z, x, y) -> bool:
        value = form(z, x, y)
        if value == 0:
            return True
        grads = [g for g in (2 * z, -2 * a * x, -2 * b * y) if g]
        if not grads:
            return False
        return _vp(value, p) >= 2 * min(_vp(g, p) for g in grads) + 1

    # primitive triples scaled so that the first unit coordinate is 1;
    # the pinned coordinate is never lifted
    level = []
    for z, x, y in itertools.product(range(p), repeat=3):
        if z == 1:
            pin = 0
        elif z == 0 and x == 1:
            pin = 1
        elif z == 0 and x == 0 and y == 1:
            pin = 2
        else:
            continue
        if form(z, x, y) % p == 0:
            level.append(((z, x, y), pin))

    modulus = p
    for j in range(1, k + 1):
        for point, _ in level:
            if hensel(*point):
                return True
        if j == k or not level:
            break
        step = modulus
        modulus *= p
        lifted = []
        for point, pin in level:
            free = [i for i in range(3) if i != pin]
            for t in itertools.product(range(p), repeat=2):
                candidate = list(point)
                for i, ti in zip(free, t):
                    candidate[i] += ti * step
                if form(*candidate) % modulus == 0:
                    lifted.append((tuple(candidate), pin))
        level = lifted
        logger.debug("solvability search a=%d b=%d p=%d: %d nodes at level %d", a, b, p, len(level), j + 1)
    return False


def solvable_oracle(a, b, p: int, precision: Optional[int] = None) -> bool:
    """Whether z^2 = a x^2 + b y^2 has a nontrivial p-adic solution.

    Exhaustive search of primitive solutions modulo p^k, accepting a
    residue once Hensel's lemma lifts it to a true root."""
    if not isprime(p):
        raise ValueError("not a prime: {}".format(p))
    a, b = squarefree_part(a), squarefree_part(b)
    k = _vp(4 * a * b, p) + 3
    if precision is not None:
        k = max(k, int(precision))
    return _solvable(a, b, int(p), k)


def classify_place(rho, p: int) -> int:
    """-1 inert, 0 ramified, +1 split for Q_p(sqrt(rho)) over Q_p."""
    if isinstance(rho, QuadSpaceData):
        rho = rho.rho
    if not isprime(p):
        raise ValueError("not a prime: {}".format(p))
    v, u = split_valuation(Fraction(rho), p)
    if v % 2:
        return 0
    if p == 2:
        return {1: 1, 5: -1}.get(_residue(u, 8), 0)
    return _unit_legendre(u, p)


def chi_T(a, rho: QuadSpaceData, v: LocalPlace) -> int:
    return hilbert_symbol(a, rho.minus_detT, v)


def chi_T_uniformizer(rho: QuadSpaceData, p: int) -> int:
    """chi_T at the uniformizer p; equals (E/v) when rho is a unit at p."""
    return chi_T(p, rho, LocalPlace.finite(p))


def is_unramified_place(rho: QuadSpaceData, p: int) -> bool:
    """p odd, rho a unit at p and E/Q_p unramified."""
    if p == 2:
        return False
    v, _ = split_valuation(rho.rho, p)
    return v == 0 and classify_place(rho, p) != 0
