"""
Command-line entry point.

    seqalg terms    [-n N] [--whole] [--field rational|gaussian] [--biv] EXPR
    seqalg triangle [--spec a..b] [--e2o] [--biv|--diagonals] [--whole] [--field ...] EXPR
    seqalg names
    seqalg check    golden-paper|identities|float-demos

Exit codes: 0 success, 1 evaluation error (or a failed check), 2 syntax error.
"""

from __future__ import annotations

import argparse
import logging
import sys
from typing import Optional, Sequence

from pydantic import ValidationError

from seqalg.cli.checks import SUITES
from seqalg.cli.commands import cmd_check, cmd_list_names, cmd_terms, cmd_triangle, format_report, parse_spec
from seqalg.cli.evaluator import EvalMode
from seqalg.config import settings
from seqalg.errors import ExprSyntaxError, SeqAlgError
from seqalg.observability import configure_logging, run_metadata

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_EVAL = 1
EXIT_SYNTAX = 2

DEFAULT_TERMS = 10


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="seqalg", description="Exact sequence algebra on the command line.")
    sub = parser.add_subparsers(dest="command", required=True)

    terms = sub.add_parser("terms", help="print the first coefficients of an expression")
    terms.add_argument("expr")
    terms.add_argument("-n", type=int, default=DEFAULT_TERMS, help="number of terms")
    terms.add_argument("--whole", action="store_true", help="require integer coefficients")
    terms.add_argument("--field", choices=["rational", "gaussian"], default="rational")
    terms.add_argument("--biv", action="store_true", help="bivariate mode (u and z defined)")

    triangle = sub.add_parser("triangle", help="print rows of a bivariate expression")
    triangle.add_argument("expr")
    triangle.add_argument("--spec", default="1..6", help="row widths: a..b or a comma list")
    triangle.add_argument("--e2o", action="store_true", help="remove the z-side factorials")
    triangle.add_argument(
        "--biv", "--diagonals", dest="diagonals", action="store_true", help="select on the stored diagonals"
    )
    triangle.add_argument("--whole", action="store_true")
    triangle.add_argument("--field", choices=["rational", "gaussian"], default="rational")

    sub.add_parser("names", help="list named sequences with their definitions")

    check = sub.add_parser("check", help="run a named check suite")
    check.add_argument("suite", help=f"one of: {', '.join(SUITES)}")
    return parser


def _triangle_mode(args: argparse.Namespace) -> str:
    if args.diagonals:
        return "bivE2o" if args.e2o else "biv"
    return "e2o" if args.e2o else "plain"


def _run(args: argparse.Namespace) -> int:
    if args.command == "terms":
        mode = EvalMode(field=args.field, arity="bivariate" if args.biv else "univariate")
        logger.info("run %s", run_metadata("terms", mode.describe()))
        print(cmd_terms(args.expr, args.n, whole=args.whole, mode=mode))
        return EXIT_OK
    if args.command == "triangle":
        mode = _triangle_mode(args)
        logger.info("run %s", run_metadata("triangle", f"{args.field}/{mode}"))
        print(cmd_triangle(args.expr, parse_spec(args.spec), mode=mode, whole=args.whole, field=args.field))
        return EXIT_OK
    if args.command == "names":
        logger.info("run %s", run_metadata("names"))
        print(cmd_list_names())
        return EXIT_OK
    logger.info("run %s", run_metadata("check"))
    report = cmd_check(args.suite)
    print(format_report(report))
    return EXIT_OK if report.ok else EXIT_EVAL


def main(argv: Optional[Sequence[str]] = None) -> int:
    configure_logging(settings)
    args = build_parser().parse_args(argv)
    try:
        return _run(args)
    except ExprSyntaxError as exc:
        print(f"syntax error: {exc}", file=sys.stderr)
        return EXIT_SYNTAX
    except SeqAlgError as exc:
        logger.debug("evaluation failed", exc_info=True)
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_EVAL
    except (ValidationError, ValueError, RecursionError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_EVAL


if __name__ == "__main__":
    sys.exit(main())
