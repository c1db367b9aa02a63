"""Command-line surface.

Three subcommands: ``gen`` tabulates a polynomial family or a Stirling
triangle, ``closed-form`` prints the rational closed form of the
polylogarithm for k <= 0, and ``verify`` runs the identity suite.

Exit codes: 0 success, 1 verification found failing or vacuous suites,
2 configuration error.  Rationals on the command line are written "a/b"
(a bare integer is accepted); decimals are rejected to keep the exactness
contract visible end to end.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from fractions import Fraction

from . import families, identities, sequences
from .exact import XPoly, rational_from_str, rational_to_str
from .pqcalc import PQParams

DEFAULT_P = "1/2"
DEFAULT_Q = "1/3"

POLY_FAMILIES = {
    "poly-euler": families.FAMILY_POLY_EULER,
    "poly-bernoulli": families.FAMILY_POLY_BERNOULLI,
    "poly-cauchy-1": families.FAMILY_POLY_CAUCHY_1,
    "poly-cauchy-2": families.FAMILY_POLY_CAUCHY_2,
}

CLASSICAL_FAMILIES = ("euler", "bernoulli-order", "frobenius-euler")
TRIANGLE_FAMILIES = ("stirling2", "stirling1")

ALL_FAMILIES = tuple(POLY_FAMILIES) + CLASSICAL_FAMILIES + TRIANGLE_FAMILIES


class CliError(Exception):
    """Configuration failure; the message names the offending flag."""


def _rational_arg(text: str) -> Fraction:
    try:
        return rational_from_str(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _nonneg_int(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}") from None
    if value < 0:
        raise argparse.ArgumentTypeError("must be nonnegative")
    return value


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="pqpoly",
        description="Exact tables and identity verification for the "
        "two-parameter poly-Euler, poly-Bernoulli and poly-Cauchy families.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    gen = sub.add_parser("gen", help="tabulate a family for n = 0..nmax")
    gen.add_argument("--family", required=True, choices=ALL_FAMILIES)
    gen.add_argument("--nmax", type=_nonneg_int, required=True)
    gen.add_argument("--k", type=int, default=1)
    gen.add_argument("--s", type=_nonneg_int, default=1)
    gen.add_argument("--u", type=_rational_arg, default=Fraction(-1))
    gen.add_argument("--p", type=_rational_arg, default=None)
    gen.add_argument("--q", type=_rational_arg, default=None)
    gen.add_argument("--format", choices=("json", "csv"), default="json")
    gen.add_argument("--output", default=None)

    verify = sub.add_parser("verify", help="run the identity suite")
    verify.add_argument("--nmax", type=_nonneg_int, default=10)
    verify.add_argument(
        "--only", default=None, help="comma-separated check ids"
    )
    verify.add_argument("--output", default=None)

    closed = sub.add_parser(
        "closed-form", help="rational closed form of the polylogarithm, k <= 0"
    )
    closed.add_argument("--k", type=int, required=True)
    closed.add_argument("--p", type=_rational_arg, default=None)
    closed.add_argument("--q", type=_rational_arg, default=None)
    closed.add_argument("--format", choices=("json", "csv"), default="json")
    closed.add_argument("--output", default=None)

    return parser


def _params_from_args(args) -> PQParams:
    p = args.p if args.p is not None else rational_from_str(DEFAULT_P)
    q = args.q if args.q is not None else rational_from_str(DEFAULT_Q)
    try:
        return PQParams(p, q)
    except ValueError as exc:
        raise CliError(f"--p/--q: {exc}") from None


def _emit(text: str, path) -> None:
    if path is None:
        sys.stdout.write(text + "\n")
    else:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(text + "\n")


def _gen_rows(args, params: PQParams):
    """Yield (n, list-of-strings) rows plus the metadata describing them."""
    family = args.family
    meta = {"family": family, "n_max": args.nmax}
    if family in POLY_FAMILIES:
        meta["k"] = args.k
        meta["p"], meta["q"] = params.as_strings()
        key = "coeffs"
        try:
            requests = [
                families.FamilyRequest(POLY_FAMILIES[family], n, args.k, params)
                for n in range(args.nmax + 1)
            ]
        except ValueError as exc:
            raise CliError(f"--k: {exc}") from None
        rows = [(req.n, req.compute().to_strings()) for req in requests]
    elif family == "euler":
        key = "coeffs"
        rows = [
            (n, sequences.euler_poly(n).to_strings())
            for n in range(args.nmax + 1)
        ]
    elif family == "bernoulli-order":
        meta["s"] = args.s
        key = "coeffs"
        rows = [
            (n, sequences.bernoulli_order(n, args.s).to_strings())
            for n in range(args.nmax + 1)
        ]
    elif family == "frobenius-euler":
        meta["s"] = args.s
        meta["u"] = rational_to_str(args.u)
        key = "coeffs"
        if args.u == 1:
            raise CliError("--u: u = 1 is outside the Frobenius-Euler domain")
        rows = [
            (n, sequences.frobenius_euler(n, args.s, args.u).to_strings())
            for n in range(args.nmax + 1)
        ]
    else:
        key = "values"
        fn = (
            sequences.stirling2
            if family == "stirling2"
            else sequences.stirling1_unsigned
        )
        rows = [
            (
                n,
                [rational_to_str(fn(n, m)) for m in range(n + 1)],
            )
            for n in range(args.nmax + 1)
        ]
    return meta, key, rows


def cmd_gen(args) -> int:
    needs_params = args.family in POLY_FAMILIES
    params = _params_from_args(args) if needs_params else None
    meta, key, rows = _gen_rows(args, params)
    if args.format == "json":
        obj = dict(meta)
        obj["rows"] = [{"n": n, key: cells} for n, cells in rows]
        text = json.dumps(obj, indent=2)
    else:
        lines = [f"n,{key}"]
        lines += [f"{n},{';'.join(cells)}" for n, cells in rows]
        text = "\n".join(lines)
    _emit(text, args.output)
    return 0


def cmd_verify(args) -> int:
    only = None
    if args.only is not None:
        only = [part.strip() for part in args.only.split(",") if part.strip()]
        unknown = [i for i in only if i not in identities.CHECK_IDS]
        if unknown:
            raise CliError(f"--only: unknown check ids: {', '.join(unknown)}")
        if not only:
            raise CliError("--only: no check ids given")
    max_workers = _thread_cap_from_env()
    config = identities.SuiteConfig(n_max=args.nmax)
    reports = identities.run_all(config, only=only, max_workers=max_workers)
    obj = {
        "n_max": args.nmax,
        "reports": [r.to_json_obj() for r in reports],
    }
    all_good = all(r.passed for r in reports)
    obj["passed"] = all_good
    _emit(json.dumps(obj, indent=2), args.output)
    return 0 if all_good else 1


def _thread_cap_from_env() -> int:
    raw = os.environ.get("PQPOLY_THREADS")
    if raw is None or raw.strip() == "":
        return 1
    try:
        value = int(raw)
    except ValueError:
        raise CliError(f"PQPOLY_THREADS: not an integer: {raw!r}") from None
    if value < 1:
        raise CliError("PQPOLY_THREADS: must be at least 1")
    return value


def cmd_closed_form(args) -> int:
    if args.k > 0:
        raise CliError("--k: closed form exists only for k <= 0")
    params = _params_from_args(args)
    if params.is_equal_limit:
        raise CliError("--p/--q: closed form requires p != q")
    rf = sequences.li_pq_closed_form(args.k, params)
    num = rf.numerator.to_strings()
    den = rf.denominator.to_strings()
    if args.format == "json":
        p_str, q_str = params.as_strings()
        text = json.dumps(
            {
                "k": args.k,
                "p": p_str,
                "q": q_str,
                "numerator": num,
                "denominator": den,
            },
            indent=2,
        )
    else:
        text = "\n".join(
            [f"numerator,{';'.join(num)}", f"denominator,{';'.join(den)}"]
        )
    _emit(text, args.output)
    return 0


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    handlers = {
        "gen": cmd_gen,
        "verify": cmd_verify,
        "closed-form": cmd_closed_form,
    }
    try:
        return handlers[args.command](args)
    except CliError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def console_main() -> None:
    sys.exit(main())


if __name__ == "__main__":
    console_main()
