"""
Sugano's generating function for the spherical Bessel function.

    C(x, y) = H(x, y) / (P(x) Q(y)) = sum_{l, m >= 0} phi(h(l, m)) x^m y^l

with h(l, m) = diag(p^(2m+l), p^(m+l), 1, p^m).  The Satake data enter
through gamma_1 = chi_1 chi_2 chi_0, gamma_2 = chi_1 chi_0, gamma_3 = chi_0,
gamma_4 = chi_2 chi_0 at the uniformizer.
"""
import itertools
import logging
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, Optional, Tuple

from gsp4_local_zeta import config
from gsp4_local_zeta.algebra import LaurentPoly, RationalFunction, VarId, var
from gsp4_local_zeta.errors import RamifiedPlace
from gsp4_local_zeta.series import series_expand, series_expand_multi


logger = logging.getLogger(__name__)

X = var(VarId.X)
Y = var(VarId.Y)

# P(x) runs over these pairs of gamma indices (0-based)
P_PAIRS = ((0, 1), (0, 3), (1, 2), (2, 3))


def _unit(value, name: str) -> LaurentPoly:
    if isinstance(value, RationalFunction):
        value = value.as_poly()
    poly = LaurentPoly.coerce(value)
    if not poly.is_monomial():
        raise ValueError("{} must be a nonzero rational or a monomial, got {}".format(name, poly))
    return poly


def _rational_sqrt(value) -> Optional[Fraction]:
    value = Fraction(value)
    if value <= 0:
        return None
    num, den = math.isqrt(value.numerator), math.isqrt(value.denominator)
    if num * num != value.numerator or den * den != value.denominator:
        return None
    return Fraction(num, den)


@dataclass(frozen=True)
class SatakeData:
    """chi_0, chi_1, chi_2 at the uniformizer.

    The square roots of chi_1 and chi_2 are optional; only the inert assembly,
    which needs omega^(1/2), requires them."""

    chi0: LaurentPoly
    chi1: LaurentPoly
    chi2: LaurentPoly
    sqrt_chi1: Optional[LaurentPoly] = None
    sqrt_chi2: Optional[LaurentPoly] = None

    def __post_init__(self):
        for name in ("chi0", "chi1", "chi2"):
            object.__setattr__(self, name, _unit(getattr(self, name), name))
        for name, square in (("sqrt_chi1", self.chi1), ("sqrt_chi2", self.chi2)):
            root = getattr(self, name)
            if root is None:
                continue
            root = _unit(root, name)
            if root ** 2 != square:
                raise ValueError("{} = {} does not square to {}".format(name, root, square))
            object.__setattr__(self, name, root)

    @classmethod
    def from_roots(cls, chi0, sqrt_chi1, sqrt_chi2) -> "SatakeData":
        sqrt_chi1 = _unit(sqrt_chi1, "sqrt_chi1")
        sqrt_chi2 = _unit(sqrt_chi2, "sqrt_chi2")
        return cls(chi0, sqrt_chi1 ** 2, sqrt_chi2 ** 2, sqrt_chi1, sqrt_chi2)

    @classmethod
    def symbolic(cls) -> "SatakeData":
        return cls.from_roots(var(VarId.C), var(VarId.A), var(VarId.B))

    @classmethod
    def from_characters(cls, chi0, chi1, chi2) -> "SatakeData":
        """Rational characters; square roots are kept when they are rational."""
        return cls(Fraction(chi0), Fraction(chi1), Fraction(chi2),
                   _rational_sqrt(chi1), _rational_sqrt(chi2))

    @property
    def gammas(self) -> Tuple[LaurentPoly, LaurentPoly, LaurentPoly, LaurentPoly]:
        c, chi1, chi2 = self.chi0, self.chi1, self.chi2
        return (chi1 * chi2 * c, chi1 * c, c, chi2 * c)

    @property
    def omega(self) -> LaurentPoly:
        g = self.gammas
        return g[0] * g[2]

    @property
    def sqrt_omega(self) -> LaurentPoly:
        if self.sqrt_chi1 is None or self.sqrt_chi2 is None:
            raise ValueError("omega^(1/2) needs the square roots of chi1 and chi2")
        return self.sqrt_chi1 * self.sqrt_chi2 * self.chi0

    def central_relation(self) -> bool:
        g = self.gammas
        return g[0] * g[2] == g[1] * g[3]

    def swapped(self) -> "SatakeData":
        """The Weyl element exchanging chi_1 and chi_2."""
        return SatakeData(self.chi0, self.chi2, self.chi1, self.sqrt_chi2, self.sqrt_chi1)

    def _values(self):
        return [v for v in (self.chi0, self.chi1, self.chi2, self.sqrt_chi1, self.sqrt_chi2) if v is not None]

    def is_numeric(self) -> bool:
        return all(v.is_constant() for v in self._values())

    def bindings(self) -> Dict[VarId, Fraction]:
        """Values of c, a, b that specialize the symbolic data to this one."""
        if not self.is_numeric() or self.sqrt_chi1 is None or self.sqrt_chi2 is None:
            raise ValueError("bindings need numeric Satake data with square roots")
        return {VarId.C: self.chi0.constant_term(),
                VarId.A: self.sqrt_chi1.constant_term(),
                VarId.B: self.sqrt_chi2.constant_term()}

    def params(self) -> Dict[str, str]:
        out = {"chi0": str(self.chi0), "chi1": str(self.chi1), "chi2": str(self.chi2)}
        if self.sqrt_chi1 is not None and self.sqrt_chi2 is not None:
            out["sqrt_chi1"] = str(self.sqrt_chi1)
            out["sqrt_chi2"] = str(self.sqrt_chi2)
        return out


@dataclass(frozen=True)
class PlaceData:
    """Local data at v: (E/v), q^(1/2) and, at split places, nu(Pi_1)."""

    legendre_E: int
    sqrt_q: LaurentPoly
    nu_pi1: Optional[LaurentPoly] = None

    def __post_init__(self):
        if self.legendre_E not in (-1, 0, 1):
            raise ValueError("(E/v) must be -1, 0 or 1, got {}".format(self.legendre_E))
        object.__setattr__(self, "sqrt_q", _unit(self.sqrt_q, "q^(1/2)"))
        if self.nu_pi1 is not None:
            object.__setattr__(self, "nu_pi1", _unit(self.nu_pi1, "nu(Pi_1)"))
        elif self.legendre_E == 1:
            raise ValueError("a split place needs nu(Pi_1)")

    @classmethod
    def symbolic(cls, legendre_E: int) -> "PlaceData":
        nu = var(VarId.U) if legendre_E == 1 else None
        return cls(legendre_E, var(VarId.R), nu)

    @classmethod
    def from_values(cls, q: int, legendre_E: int, nu_pi1=None) -> "PlaceData":
        if not config.is_square_of_prime_power(q):
            raise ValueError("q must be an even power of a prime so that q^(1/2) is rational: {}".format(q))
        return cls(legendre_E, math.isqrt(q), Fraction(nu_pi1) if nu_pi1 is not None else None)

    @property
    def case(self) -> str:
        return {-1: "inert", 0: "ramified", 1: "split"}[self.legendre_E]

    @property
    def q(self) -> LaurentPoly:
        return self.sqrt_q ** 2

    def nu_pi2(self, satake: SatakeData) -> LaurentPoly:
        if self.nu_pi1 is None:
            raise ValueError("nu(Pi_2) is only defined at split places")
        return satake.omega * self.nu_pi1.inverse()

    def epsilon(self, satake: SatakeData) -> LaurentPoly:
        if self.legendre_E == 1:
            return self.nu_pi1 + self.nu_pi2(satake)
        return LaurentPoly.zero()

    def is_numeric(self) -> bool:
        return self.sqrt_q.is_constant() and (self.nu_pi1 is None or self.nu_pi1.is_constant())

    def bindings(self) -> Dict[VarId, Fraction]:
        if not self.is_numeric():
            raise ValueError("symbolic place data has no numeric bindings")
        values = {VarId.R: self.sqrt_q.constant_term()}
        if self.nu_pi1 is not None:
            values[VarId.U] = self.nu_pi1.constant_term()
        return values

    def params(self) -> Dict[str, str]:
        out = {"q": str(self.q), "legendre_E": str(self.legendre_E)}
        if self.nu_pi1 is not None:
            out["nu_pi1"] = str(self.nu_pi1)
        return out


@dataclass(frozen=True)
class SuganoParams:
    alpha: LaurentPoly
    beta: LaurentPoly
    A1: LaurentPoly
    A2: LaurentPoly
    A3: LaurentPoly
    A4: LaurentPoly
    A5: LaurentPoly


@dataclass(frozen=True)
class CosetRep:
    ell: int
    m: int

    def __post_init__(self):
        if self.ell < 0 or self.m < 0:
            raise ValueError("h(l, m) needs l, m >= 0, got ({}, {})".format(self.ell, self.m))

    def h_diagonal(self) -> Tuple[int, int, int, int]:
        """Exponents of the uniformizer on the diagonal of h(l, m)."""
        return (2 * self.m + self.ell, self.m + self.ell, 0, self.m)


def build_params(s: SatakeData, p: PlaceData) -> SuganoParams:
    if p.legendre_E == 0:
        raise RamifiedPlace("(E/v) = 0: ramified discriminant is not supported")

    q_inv = p.q.inverse()
    omega = s.omega
    gammas = s.gammas
    return SuganoParams(
        alpha=p.sqrt_q ** -3 * sum(gammas, LaurentPoly.zero()),
        beta=q_inv ** 3 * sum((gi * gj for gi, gj in itertools.combinations(gammas, 2)), LaurentPoly.zero()),
        A1=q_inv,
        A2=q_inv ** 2 * omega,
        A3=q_inv ** 3 * omega,
        A4=-(q_inv ** 2) * p.legendre_E,
        A5=q_inv ** 2 * p.epsilon(s),
    )


def sugano_P_factors(s: SatakeData, p: PlaceData) -> Tuple[LaurentPoly, ...]:
    gammas = s.gammas
    scale = p.q.inverse() ** 2
    return tuple(1 - gammas[i] * gammas[j] * scale * X for i, j in P_PAIRS)


def sugano_Q_factors(s: SatakeData, p: PlaceData) -> Tuple[LaurentPoly, ...]:
    scale = p.sqrt_q ** -3
    return tuple(1 - g * scale * Y for g in s.gammas)


def _product(factors) -> LaurentPoly:
    out = LaurentPoly.constant(1)
    for f in factors:
        out = out * f
    return out


def sugano_P(s: SatakeData, p: PlaceData) -> LaurentPoly:
    return _product(sugano_P_factors(s, p))


def sugano_Q(s: SatakeData, p: PlaceData) -> LaurentPoly:
    return _product(sugano_Q_factors(s, p))


def sugano_M1(params: SuganoParams) -> RationalFunction:
    A1, A2, A4, A5 = params.A1, params.A2, params.A4, params.A5
    linear = A1 * A5 * params.alpha + A4 * params.beta - A1 * A5 ** 2 - 2 * A1 * A2 * A4
    return (1 - RationalFunction(A1.inverse() * linear * X, A1 + A4)
            + A1.inverse() * A2 ** 2 * A4 * X ** 2)


def sugano_M2(params: SuganoParams) -> LaurentPoly:
    A1, A2, beta = params.A1, params.A2, params.beta
    shifted = A1 * A2 - beta
    return 1 + A1.inverse() * shifted * X + A1.inverse() * A2 * shifted * X ** 2 + A2 ** 3 * X ** 3


def sugano_H(s: SatakeData, p: PlaceData) -> RationalFunction:
    params = build_params(s, p)
    A1, A2, A3, A4, A5, alpha = params.A1, params.A2, params.A3, params.A4, params.A5, params.alpha
    M1 = sugano_M1(params)
    M2 = sugano_M2(params)
    P = sugano_P(s, p)

    return ((1 + A2 * A3 * X * Y ** 2) * (M1 * (1 + A2 * X) + A2 * A5 * A1.inverse() * alpha * X ** 2)
            - A2 * X * Y * (M1 * alpha - A5 * M2)
            - A5 * P * Y
            - A2 * A4 * P * Y ** 2)


def sugano_C(s: SatakeData, p: PlaceData) -> RationalFunction:
    """H / (P Q) with the eight linear factors kept as denominator factors."""
    H = sugano_H(s, p)
    C = H * RationalFunction.from_factored(1, sugano_P_factors(s, p) + sugano_Q_factors(s, p))
    logger.debug("C(x, y) for the %s case: %d numerator terms", p.case, len(C.num))
    return C


def bessel_table(s: SatakeData, p: PlaceData, max_ell: int, max_m: int) -> Dict[Tuple[int, int], RationalFunction]:
    """phi(h(l, m)) for l <= max_ell, m <= max_m, keyed by (l, m)."""
    expansion = series_expand_multi(sugano_C(s, p), (VarId.X, VarId.Y), (max_m, max_ell))
    return {(ell, m): expansion.coefficient(m, ell)
            for ell in range(max_ell + 1) for m in range(max_m + 1)}


def bessel_coeff(s: SatakeData, p: PlaceData, rep: CosetRep) -> RationalFunction:
    return bessel_table(s, p, rep.ell, rep.m)[(rep.ell, rep.m)]


def bessel_coeff_iterated(s: SatakeData, p: PlaceData, rep: CosetRep) -> RationalFunction:
    """Same coefficient through two univariate expansions, x first."""
    in_x = series_expand(sugano_C(s, p), VarId.X, rep.m).coefficient(rep.m)
    return series_expand(in_x, VarId.Y, rep.ell).coefficient(rep.ell)
