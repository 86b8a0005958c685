"""
The unramified local integral I(s), assembled three ways and checked.

    closed form      : the product formula in t = q^-s
    assembled        : C(x, y) specialized at the coset substitutions
    series oracle    : the coset sum rebuilt from index, volume, section and
                       Weil weights, central character and Bessel values

verify() runs the identity checks for one case and mode and returns a
VerifyReport; a failed identity is a report entry, never an exception.
"""
import logging
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, List, Optional, Sequence, Tuple

from gsp4_local_zeta import config
from gsp4_local_zeta.algebra import RationalFunction, VarId, rf_equal, var
from gsp4_local_zeta.cosets import (SplitConvention, coset_weight, furusawa_index, inert_representatives,
                                    split_representatives)
from gsp4_local_zeta.errors import DegenerateSplitParameter, RamifiedPlace, WrongCase
from gsp4_local_zeta.lfactor import gamma_pair_ratios, local_lfactor, zeta_normalizer
from gsp4_local_zeta.sampling import LEGENDRE_BY_CASE, ParameterSample, sample_batch
from gsp4_local_zeta.series import TruncSeries, series_expand
from gsp4_local_zeta.sugano import PlaceData, SatakeData, bessel_table, sugano_C


logger = logging.getLogger(__name__)

T = var(VarId.T)
MODES = ("symbolic", "univariate", "series")


@dataclass(frozen=True)
class Mismatch:
    t_power: int
    lhs: str
    rhs: str

    def to_dict(self) -> Dict[str, object]:
        return {"t_power": self.t_power, "lhs": self.lhs, "rhs": self.rhs}


@dataclass(frozen=True)
class CheckResult:
    name: str
    first_mismatch: Optional[Mismatch] = None

    @property
    def passed(self) -> bool:
        return self.first_mismatch is None

    def to_dict(self) -> Dict[str, object]:
        return {
            "name": self.name,
            "pass": self.passed,
            "first_mismatch": self.first_mismatch.to_dict() if self.first_mismatch else None,
        }


@dataclass
class VerifyReport:
    case: str
    mode: str
    order: int
    seed: int
    params: Dict[str, str] = field(default_factory=dict)
    checks: List[CheckResult] = field(default_factory=list)
    conventions: Dict[str, str] = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return all(check.passed for check in self.checks)

    def to_dict(self) -> Dict[str, object]:
        return {
            "case": self.case,
            "mode": self.mode,
            "order": self.order,
            "seed": self.seed,
            "params": dict(self.params),
            "checks": [check.to_dict() for check in self.checks],
            "conventions": dict(self.conventions),
        }


def _require_case(p: PlaceData, legendre_E: int):
    if p.legendre_E == 0:
        raise RamifiedPlace("(E/v) = 0 is outside the unramified computation")
    if p.legendre_E != legendre_E:
        raise WrongCase("expected (E/v) = {}, the place has {}".format(legendre_E, p.legendre_E))


def _substitute_xy(C: RationalFunction, x, y) -> RationalFunction:
    return C.substitute({VarId.X: x, VarId.Y: y})


def assembled_inert(s: SatakeData, p: PlaceData) -> RationalFunction:
    _require_case(p, -1)
    C = sugano_C(s, p)
    q_inv = p.q.inverse()
    x0 = -(p.q ** 2) * s.omega.inverse() * T
    y0 = p.q * s.sqrt_omega.inverse() * T

    full = _substitute_xy(C, x0, y0) + _substitute_xy(C, x0, -y0)
    edge = _substitute_xy(C, 0, y0) + _substitute_xy(C, 0, -y0)
    half = Fraction(1, 2)
    return (1 + q_inv) * half * full - q_inv * half * edge


def closed_form_inert(s: SatakeData, p: PlaceData, tamper: bool = False) -> RationalFunction:
    """(1 - t)(1 - t/q) prod (1 + gamma_i gamma_j t / omega)^-1."""
    _require_case(p, -1)
    lead = 1 + T if tamper else 1 - T
    num = lead * (1 - p.q.inverse() * T)
    return RationalFunction.from_factored(num, [1 + ratio * T for ratio in gamma_pair_ratios(s).values()])


def eta_theta(s: SatakeData, p: PlaceData) -> Tuple[RationalFunction, RationalFunction, RationalFunction, RationalFunction]:
    _require_case(p, 1)
    u = p.nu_pi1
    u2 = u ** 2
    omega = s.omega
    if u2 == omega:
        raise DegenerateSplitParameter("nu(Pi_1) = nu(Pi_2) = {}".format(u))
    return (
        RationalFunction(u2, u2 - omega),
        RationalFunction(omega, omega - u2),
        RationalFunction(u, u2 - omega),
        RationalFunction(u, omega - u2),
    )


def assembled_split(s: SatakeData, p: PlaceData, correction: int = 1) -> RationalFunction:
    """(1 - 1/q) sum eta_i C(x1, y_i) + correction/q sum eta_i C(0, y_i)."""
    if correction not in (1, -1):
        raise ValueError("correction must be +1 or -1, got {}".format(correction))
    eta1, eta2, _, _ = eta_theta(s, p)
    C = sugano_C(s, p)
    q_inv = p.q.inverse()
    omega_inv = s.omega.inverse()
    x1 = p.q ** 2 * omega_inv * T
    y1 = p.nu_pi1 * p.q * omega_inv * T
    y2 = p.nu_pi2(s) * p.q * omega_inv * T

    full = eta1 * _substitute_xy(C, x1, y1) + eta2 * _substitute_xy(C, x1, y2)
    edge = eta1 * _substitute_xy(C, 0, y1) + eta2 * _substitute_xy(C, 0, y2)
    return (1 - q_inv) * full + correction * q_inv * edge


def closed_form_split(s: SatakeData, p: PlaceData, tamper: bool = False) -> RationalFunction:
    """(1 + t)(1 - t/q) prod (1 - gamma_i gamma_j t / omega)^-1."""
    _require_case(p, 1)
    lead = 1 - T if tamper else 1 + T
    num = lead * (1 - p.q.inverse() * T)
    return RationalFunction.from_factored(num, [1 - ratio * T for ratio in gamma_pair_ratios(s).values()])


def series_oracle(case: str, s: SatakeData, p: PlaceData, order: int,
                  convention: SplitConvention = SplitConvention.PROOF) -> TruncSeries:
    """The coset sum of I(s) truncated at t^order."""
    if case not in LEGENDRE_BY_CASE:
        raise ValueError("case must be 'inert' or 'split', got '{}'".format(case))
    legendre_E = LEGENDRE_BY_CASE[case]
    _require_case(p, legendre_E)
    if order < 0:
        raise ValueError("series order must be nonnegative: {}".format(order))

    # chi_T at the uniformizer is -1 at inert places and +1 at split ones
    chi_T = legendre_E
    omega_inv = s.omega.inverse()
    table = bessel_table(s, p, order, order)

    if case == "inert":
        terms = [(n, m, 0, None) for n, m in inert_representatives(order)]
    else:
        nus = {1: p.nu_pi1, 2: p.nu_pi2(s)}
        terms = [(n, m, k, nus[i]) for i, n, m, k in split_representatives(order, convention)]

    coeffs: Dict[int, RationalFunction] = {}
    for n, m, k, nu in terms:
        weight = coset_weight(case, n, m, k)
        value = furusawa_index(p.q, legendre_E, m) * weight.scalar(p.sqrt_q, chi_T) * omega_inv ** (n + m + k)
        if nu is not None:
            value = value * nu ** k
        term = table[(2 * n + k, m)] * value
        d = weight.t_power
        coeffs[d] = coeffs[d] + term if d in coeffs else term

    logger.debug("series oracle %s to t^%d: %d cosets", case, order, len(terms))
    return TruncSeries(VarId.T, order, {(d,): c for d, c in coeffs.items()})


def first_mismatch(lhs, rhs, order: int) -> Optional[Mismatch]:
    """Lowest power of t where two rational functions differ, or None if equal."""
    if rf_equal(lhs, rhs):
        return None
    horizon = max(order, 2)
    while horizon <= 4 * max(order, 2) + 8:
        left = series_expand(lhs, VarId.T, horizon)
        right = series_expand(rhs, VarId.T, horizon)
        index = left.first_difference(right)
        if index is not None:
            (k,) = index
            return Mismatch(k, str(left.coefficient(k)), str(right.coefficient(k)))
        horizon *= 2
    # equal through the explored range but not identical
    return Mismatch(-1, str(lhs), str(rhs))


def _series_mismatch(oracle: TruncSeries, expected: TruncSeries) -> Optional[Mismatch]:
    index = oracle.first_difference(expected)
    if index is None:
        return None
    (k,) = index
    return Mismatch(k, str(oracle.coefficient(k)), str(expected.coefficient(k)))


def _closed_form(case: str, s: SatakeData, p: PlaceData, tamper: bool) -> RationalFunction:
    if case == "inert":
        return closed_form_inert(s, p, tamper)
    return closed_form_split(s, p, tamper)


def _identity_checks(case: str, s: SatakeData, p: PlaceData, order: int, tamper: bool,
                     prefix: str) -> Tuple[List[CheckResult], Optional[int]]:
    closed = _closed_form(case, s, p, tamper)
    twist = LEGENDRE_BY_CASE[case]
    checks = [CheckResult(prefix + "normalized_vs_lfactor",
                          first_mismatch(zeta_normalizer(p) * closed, local_lfactor(s, twist), order))]

    if case == "inert":
        checks.insert(0, CheckResult(prefix + "assembled_vs_closed",
                                     first_mismatch(assembled_inert(s, p), closed, order)))
        return checks, None

    eta1, eta2, theta1, theta2 = eta_theta(s, p)
    checks.append(CheckResult(prefix + "eta_sum", first_mismatch(eta1 + eta2, 1, 0)))
    checks.append(CheckResult(prefix + "theta_sum", first_mismatch(theta1 + theta2, 0, 0)))

    # the displayed + correction is tried first; the - variant only on failure
    matched = None
    mismatch = None
    for correction in (1, -1):
        found = first_mismatch(assembled_split(s, p, correction), closed, order)
        if found is None:
            matched = correction
            break
        if mismatch is None:
            mismatch = found
    checks.insert(0, CheckResult(prefix + "assembled_vs_closed", None if matched is not None else mismatch))
    return checks, matched


def _swap_check(s: SatakeData, p: PlaceData, order: int, prefix: str) -> CheckResult:
    swapped = PlaceData(p.legendre_E, p.sqrt_q, p.nu_pi2(s))
    return CheckResult(prefix + "nu_swap_invariance",
                       first_mismatch(assembled_split(s, p), assembled_split(s, swapped), order))


def verify(case: str, mode: str, order: Optional[int] = None, seed: Optional[int] = None,
           samples: Optional[int] = None, q_values: Optional[Sequence[int]] = None,
           sample: Optional[ParameterSample] = None, tamper: bool = False,
           conventions: Sequence[SplitConvention] = (SplitConvention.PROOF, SplitConvention.UNIFORM),
           degenerate: bool = False) -> VerifyReport:
    if case not in LEGENDRE_BY_CASE:
        raise ValueError("case must be 'inert' or 'split', got '{}'".format(case))
    if mode not in MODES:
        raise ValueError("mode must be one of {}, got '{}'".format(", ".join(MODES), mode))
    order = config.default_order if order is None else order
    seed = config.default_seed if seed is None else seed
    samples = config.default_samples if samples is None else samples
    if degenerate and (case, mode) != ("split", "series"):
        raise ValueError("nu(Pi_1) = nu(Pi_2) is only checked by the split series oracle")
    if order < 0:
        raise ValueError("series order must be nonnegative: {}".format(order))

    report = VerifyReport(case=case, mode=mode, order=order, seed=seed)

    if mode == "symbolic":
        s = SatakeData.symbolic()
        p = PlaceData.symbolic(LEGENDRE_BY_CASE[case])
        report.params.update(s.params())
        report.params.update(p.params())
        checks, matched = _identity_checks(case, s, p, order, tamper, "")
        report.checks.extend(checks)
        if case == "split":
            report.checks.append(_swap_check(s, p, order, ""))
            report.conventions["split_correction"] = _sign_name(matched)
        return report

    batch = [sample] if sample is not None else sample_batch(case, seed, samples, q_values, degenerate)

    if mode == "univariate":
        corrections = set()
        for index, item in enumerate(batch):
            prefix = "sample{}.".format(index)
            logger.debug("univariate %s sample %d: %s", case, index, item.params())
            report.params.update(item.params(prefix))
            checks, matched = _identity_checks(case, item.satake, item.place, order, tamper, prefix)
            report.checks.extend(checks)
            if case == "split":
                report.checks.append(_swap_check(item.satake, item.place, order, prefix))
                corrections.add(matched)
        if case == "split":
            report.conventions["split_correction"] = _sign_name(corrections.pop()) if len(corrections) == 1 else "mixed"
        return report

    matching = {SplitConvention(c): True for c in conventions}
    for index, item in enumerate(batch):
        prefix = "sample{}.".format(index)
        logger.debug("series %s sample %d: %s", case, index, item.params())
        report.params.update(item.params(prefix))
        expected = series_expand(_closed_form(case, item.satake, item.place, tamper), VarId.T, order)
        if case == "inert":
            oracle = series_oracle(case, item.satake, item.place, order)
            report.checks.append(CheckResult(prefix + "series_oracle", _series_mismatch(oracle, expected)))
            continue

        best = None
        passed = False
        for convention in matching:
            oracle = series_oracle(case, item.satake, item.place, order, convention)
            found = _series_mismatch(oracle, expected)
            if found is None:
                passed = True
            else:
                matching[convention] = False
                if best is None:
                    best = found
        report.checks.append(CheckResult(prefix + "series_oracle", None if passed else best))

    if case == "split":
        names = [c.value for c, ok in matching.items() if ok]
        report.conventions["split_enumeration"] = ",".join(names) if names else "none"
        if degenerate:
            report.conventions["split_parameter"] = "nu1 = nu2"
    return report


def _sign_name(correction: Optional[int]) -> str:
    if correction is None:
        return "none"
    return "+1" if correction > 0 else "-1"
