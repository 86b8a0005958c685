"""
Command line front end.

    gsp4-local-zeta verify --case inert --mode univariate --samples 20 --seed 7
    gsp4-local-zeta bessel-coeffs --case split --max-ell 2 --max-m 1
    gsp4-local-zeta lfactor --chi1 2 --chi2 3 --twist -1
    gsp4-local-zeta hilbert 5 2 5
    gsp4-local-zeta classify 2 5
    gsp4-local-zeta coset-index --p 3 --rho 2 --m 2

Exit codes: 0 all checks pass, 1 a check failed or the term ceiling was hit,
2 usage error.
"""
import argparse
import logging
import sys
from fractions import Fraction
from pathlib import Path
from typing import List, Optional

from gsp4_local_zeta import config
from gsp4_local_zeta.cosets import SplitConvention, index_bruteforce, index_formula
from gsp4_local_zeta.errors import Gsp4Error, ResourceLimit
from gsp4_local_zeta.hilbert import LocalPlace, QuadSpaceData, classify_place, hilbert_symbol
from gsp4_local_zeta.lfactor import local_lfactor, reciprocal_roots
from gsp4_local_zeta.report import render_text, to_json
from gsp4_local_zeta.sampling import LEGENDRE_BY_CASE
from gsp4_local_zeta.sugano import PlaceData, SatakeData, bessel_table
from gsp4_local_zeta.verifier import MODES, verify


logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_USAGE = 2

CLASSIFICATION = {-1: "inert", 0: "ramified", 1: "split"}


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="gsp4-local-zeta",
                                     description="Exact checks of the unramified local zeta integral on GSp(4).")
    parser.add_argument("--verbose", "-v", action="store_true", help="debug logging")
    commands = parser.add_subparsers(dest="command", required=True)

    cmd = commands.add_parser("verify", help="check the local integral identities")
    cmd.add_argument("--case", choices=sorted(LEGENDRE_BY_CASE), required=True)
    cmd.add_argument("--mode", choices=MODES, default="univariate")
    cmd.add_argument("--order", type=int, default=config.default_order, help="series truncation N")
    cmd.add_argument("--samples", type=int, default=config.default_samples)
    cmd.add_argument("--seed", type=int, default=config.default_seed)
    cmd.add_argument("--q-values", type=config.parse_q_values, default=config.default_q_values,
                     help="comma separated squares of prime powers")
    cmd.add_argument("--convention", choices=["proof", "uniform", "both"], default="both",
                     help="split-case coset enumeration for the series oracle")
    cmd.add_argument("--degenerate", action="store_true",
                     help="split series only: sample nu(Pi_1) = nu(Pi_2)")
    cmd.add_argument("--output", type=Path, default=None, help="write the JSON report here")
    cmd.add_argument("--tamper", action="store_true", help=argparse.SUPPRESS)

    cmd = commands.add_parser("bessel-coeffs", help="table of spherical Bessel values")
    cmd.add_argument("--case", choices=sorted(LEGENDRE_BY_CASE), required=True)
    cmd.add_argument("--max-ell", type=int, default=2)
    cmd.add_argument("--max-m", type=int, default=2)
    _add_character_args(cmd)
    cmd.add_argument("--q", type=int, default=None, help="numeric q; symbolic when omitted")
    cmd.add_argument("--nu", type=Fraction, default=None, help="nu(Pi_1) at a split place")

    cmd = commands.add_parser("lfactor", help="degree-five local L-factor")
    _add_character_args(cmd)
    cmd.add_argument("--twist", type=int, choices=[1, -1], default=1)

    cmd = commands.add_parser("hilbert", help="Hilbert symbol (a, b)_v")
    cmd.add_argument("a", type=Fraction)
    cmd.add_argument("b", type=Fraction)
    cmd.add_argument("v", type=LocalPlace.parse, help="a prime or 'real'")

    cmd = commands.add_parser("classify", help="type of Q_p(sqrt(rho)) over Q_p")
    cmd.add_argument("rho", type=Fraction)
    cmd.add_argument("p", type=int)

    cmd = commands.add_parser("coset-index", help="[H(O) : H^m(O)] by enumeration")
    cmd.add_argument("--p", type=int, required=True)
    cmd.add_argument("--rho", type=int, required=True)
    cmd.add_argument("--m", type=int, required=True)
    cmd.add_argument("--engine", choices=["numpy", "python"], default="numpy")
    return parser


def _add_character_args(cmd: argparse.ArgumentParser):
    cmd.add_argument("--chi0", type=Fraction, default=None)
    cmd.add_argument("--chi1", type=Fraction, default=None)
    cmd.add_argument("--chi2", type=Fraction, default=None)


def _satake_from_args(args) -> SatakeData:
    values = (args.chi0, args.chi1, args.chi2)
    if all(v is None for v in values):
        return SatakeData.symbolic()
    return SatakeData.from_characters(*(Fraction(1) if v is None else v for v in values))


def _cmd_verify(args) -> int:
    if args.convention == "both":
        conventions = (SplitConvention.PROOF, SplitConvention.UNIFORM)
    else:
        conventions = (SplitConvention(args.convention),)

    report = verify(args.case, args.mode, order=args.order, seed=args.seed, samples=args.samples,
                    q_values=args.q_values, tamper=args.tamper, conventions=conventions,
                    degenerate=args.degenerate)
    print(render_text(report), end="")
    if args.output is not None:
        args.output.write_text(to_json(report) + "\n")
        print("report written to: {}".format(args.output))
    return EXIT_OK if report.passed else EXIT_FAILED


def _cmd_bessel(args) -> int:
    satake = _satake_from_args(args)
    legendre_E = LEGENDRE_BY_CASE[args.case]
    if args.q is None:
        place = PlaceData.symbolic(legendre_E)
    else:
        place = PlaceData.from_values(args.q, legendre_E, args.nu)
    table = bessel_table(satake, place, args.max_ell, args.max_m)
    for (ell, m), value in sorted(table.items()):
        print("l={} m={}: {}".format(ell, m, value))
    return EXIT_OK


def _cmd_lfactor(args) -> int:
    satake = _satake_from_args(args)
    print(local_lfactor(satake, args.twist))
    print("reciprocal roots: {}".format(", ".join(str(r) for r in reciprocal_roots(satake, args.twist))))
    return EXIT_OK


def _cmd_hilbert(args) -> int:
    print(hilbert_symbol(args.a, args.b, args.v))
    return EXIT_OK


def _cmd_classify(args) -> int:
    value = classify_place(QuadSpaceData(args.rho), args.p)
    print("{} ({})".format(value, CLASSIFICATION[value]))
    return EXIT_OK


def _cmd_coset_index(args) -> int:
    brute = index_bruteforce(args.p, args.rho, args.m, engine=args.engine)
    legendre_E = classify_place(args.rho, args.p)
    formula = index_formula(args.p, legendre_E, args.m)
    print("brute force: {}".format(brute))
    print("formula:     {}".format(formula))
    return EXIT_OK if brute == formula else EXIT_FAILED


_COMMANDS = {
    "verify": _cmd_verify,
    "bessel-coeffs": _cmd_bessel,
    "lfactor": _cmd_lfactor,
    "hilbert": _cmd_hilbert,
    "classify": _cmd_classify,
    "coset-index": _cmd_coset_index,
}


def run(argv: Optional[List[str]] = None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_OK if exc.code in (0, None) else EXIT_USAGE

    logging.basicConfig(level=logging.DEBUG if args.verbose else logging.WARNING,
                        format="%(asctime)s %(name)s %(levelname)s: %(message)s")
    try:
        return _COMMANDS[args.command](args)
    except ResourceLimit as exc:
        # term ceiling hit mid-computation
        print("aborted: {}".format(exc), file=sys.stderr)
        return EXIT_FAILED
    except (ValueError, Gsp4Error) as exc:
        print("error: {}".format(exc), file=sys.stderr)
        return EXIT_USAGE


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
