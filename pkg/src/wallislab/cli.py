"""Command-line front end.

Subcommands: ``compute`` (single bounded estimate), ``table`` (convergence
CSV, optionally with a rendered figure), ``verify`` (check suites), and
``buffon`` (needle simulator).  Exit codes: 0 success, 1 check or I/O
failure, 2 usage error.
"""

from __future__ import annotations

import argparse
import os
import sys
from typing import Optional, Sequence

from . import __version__
from .numkit import DEFAULT_DIGITS, MAX_REFERENCE_DIGITS
from .pi_series import BuffonConfig, ZeroCrossingsError, buffon_estimate
from .report import (
    TABLE_METHODS,
    compute_estimate,
    convergence_table,
    write_csv,
)
from .verify import SUITE_NAMES, SuiteParams, run_suite

EXIT_OK = 0
EXIT_FAILURE = 1
EXIT_USAGE = 2

PRECISION_ENV_VAR = "WALLISLAB_PRECISION"

_METHOD_BY_NAME = {m.value: m for m in TABLE_METHODS}


def _default_precision() -> int:
    raw = os.environ.get(PRECISION_ENV_VAR)
    if raw is None:
        return DEFAULT_DIGITS
    try:
        return int(raw)
    except ValueError:
        return DEFAULT_DIGITS


def _add_precision_flag(parser: argparse.ArgumentParser) -> None:
    parser.add_argument(
        "--precision",
        type=int,
        default=_default_precision(),
        metavar="D",
        help=f"working precision in decimal digits (default {DEFAULT_DIGITS}, max "
        f"{MAX_REFERENCE_DIGITS}; env {PRECISION_ENV_VAR})",
    )


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="wallislab",
        description="High-precision cross-verification of the Wallis-product "
        "identities: Gamma/Beta, Bernoulli/zeta, Student-t normalization, "
        "pi series, and the log(pi/2) series.",
    )
    parser.add_argument("--version", action="version", version=f"wallislab {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p_compute = sub.add_parser("compute", help="compute one estimate with its error bound")
    p_compute.add_argument("method", choices=sorted(_METHOD_BY_NAME))
    p_compute.add_argument("--terms", type=int, required=True, metavar="N")
    p_compute.add_argument("--seed", type=int, default=42, help="RNG seed (buffon-mc only)")
    _add_precision_flag(p_compute)

    p_table = sub.add_parser("table", help="write a convergence table as CSV")
    p_table.add_argument("method", choices=sorted(_METHOD_BY_NAME))
    p_table.add_argument("--max-terms", type=int, required=True, metavar="N")
    p_table.add_argument("--step", type=int, default=1, metavar="S")
    p_table.add_argument("--out", default="-", metavar="PATH", help="output CSV path (default stdout)")
    p_table.add_argument(
        "--plot",
        metavar="PATH",
        help="also render a convergence figure (png/pdf/svg) alongside the CSV",
    )
    p_table.add_argument("--seed", type=int, default=42, help="RNG seed (buffon-mc only)")
    _add_precision_flag(p_table)

    p_verify = sub.add_parser("verify", help="run a cross-verification suite")
    p_verify.add_argument("--suite", choices=sorted(SUITE_NAMES), default="all")
    p_verify.add_argument("--tsv", action="store_true", help="machine-readable output")
    _add_precision_flag(p_verify)

    p_buffon = sub.add_parser("buffon", help="Buffon's-needle Monte Carlo estimate of pi")
    p_buffon.add_argument("--needle", type=float, required=True, metavar="L")
    p_buffon.add_argument("--gap", type=float, required=True, metavar="D")
    p_buffon.add_argument("--throws", type=int, required=True, metavar="N")
    p_buffon.add_argument("--seed", type=int, default=42, metavar="S")
    _add_precision_flag(p_buffon)

    return parser


def _check_precision(parser: argparse.ArgumentParser, digits: int) -> None:
    if not 1 <= digits <= MAX_REFERENCE_DIGITS:
        parser.error(f"--precision must be in [1, {MAX_REFERENCE_DIGITS}], got {digits}")


def _cmd_compute(parser: argparse.ArgumentParser, args: argparse.Namespace) -> int:
    method = _METHOD_BY_NAME[args.method]
    try:
        result = compute_estimate(method, args.terms, args.precision, args.seed)
    except (ValueError, ZeroCrossingsError) as exc:
        parser.error(str(exc))
    print(f"method:    {method.value}")
    print(f"estimate:  {result.estimate.to_decimal_string()}")
    print(f"bound:     {result.abs_error_bound.to_decimal_string()}")
    print(f"terms:     {result.terms_used}")
    return EXIT_OK


def _cmd_table(parser: argparse.ArgumentParser, args: argparse.Namespace) -> int:
    method = _METHOD_BY_NAME[args.method]
    try:
        records = convergence_table(
            method, args.max_terms, args.step, args.precision, args.seed
        )
    except ValueError as exc:
        parser.error(str(exc))
    if args.out == "-":
        write_csv(records, sys.stdout)
    else:
        try:
            with open(args.out, "w", encoding="utf-8", newline="\n") as fh:
                write_csv(records, fh)
        except OSError as exc:
            print(f"error: cannot write {args.out}: {exc}", file=sys.stderr)
            return EXIT_FAILURE
    if args.plot:
        from .plotting import render_convergence_figure

        try:
            render_convergence_figure(records, method, args.plot)
        except OSError as exc:
            print(f"error: cannot write {args.plot}: {exc}", file=sys.stderr)
            return EXIT_FAILURE
    return EXIT_OK


def _cmd_verify(parser: argparse.ArgumentParser, args: argparse.Namespace) -> int:
    report = run_suite(args.suite, SuiteParams(digits=args.precision))
    if args.tsv:
        sys.stdout.write(report.to_tsv())
    else:
        print(report.to_text())
    return EXIT_FAILURE if report.failed else EXIT_OK


def _cmd_buffon(parser: argparse.ArgumentParser, args: argparse.Namespace) -> int:
    try:
        config = BuffonConfig(args.needle, args.gap, args.throws, args.seed)
    except ValueError as exc:
        parser.error(str(exc))
    try:
        result = buffon_estimate(config, args.precision)
    except ZeroCrossingsError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_FAILURE
    print(f"pi_estimate: {result.estimate.to_decimal_string()}")
    print(f"bound_3sigma: {result.abs_error_bound.to_decimal_string()}")
    print(f"crossings: {result.terms_used}")
    print(f"throws: {config.throws}")
    print(f"seed: {config.rng_seed}")
    return EXIT_OK


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    _check_precision(parser, args.precision)
    handler = {
        "compute": _cmd_compute,
        "table": _cmd_table,
        "verify": _cmd_verify,
        "buffon": _cmd_buffon,
    }[args.command]
    return handler(parser, args)


if __name__ == "__main__":
    sys.exit(main())
