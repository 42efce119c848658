"""
The four subcommands. Each returns the text to print; errors propagate to
`main`, which maps them to exit codes.
"""

from __future__ import annotations

import logging
import re
from typing import Literal

from seqalg.bivariate import (
    diag_e2o,
    diagonals,
    is_bivariate_name,
    registry_entries,
    select,
    select_w,
    un_diag,
    un_diag_e2o,
)
from seqalg.calculus import CoreName
from seqalg.cli.checks import SuiteReport, run_suite
from seqalg.cli.evaluator import EvalMode, evaluate
from seqalg.cli.render import format_row, format_rows, in_field
from seqalg.cli.syntax import parse
from seqalg.errors import ExprSyntaxError
from seqalg.seq_core import make_all_whole, take

logger = logging.getLogger(__name__)

TriangleMode = Literal["plain", "e2o", "biv", "bivE2o"]

_RANGE = re.compile(r"^\s*(\d+)\s*\.\.\s*(\d+)\s*$")


def parse_spec(text: str) -> list[int]:
    """`a..b` (inclusive) or a comma list of row widths."""
    match = _RANGE.match(text)
    if match:
        lo, hi = int(match.group(1)), int(match.group(2))
        return list(range(lo, hi + 1))
    try:
        return [int(part) for part in text.split(",") if part.strip()]
    except ValueError:
        raise ExprSyntaxError(f"bad row spec {text!r}", 0, ["a..b", "comma list"]) from None


def cmd_terms(src: str, n: int, whole: bool = False, mode: EvalMode | None = None) -> str:
    """The first n coefficients; bivariate sequences print their n first diagonals."""
    mode = mode or EvalMode()
    seq = evaluate(parse(src), mode)
    if mode.bivariate:
        rows = diagonals(seq, n)
        if whole:
            rows = [[make_all_whole(c) for c in row] for row in rows]
        else:
            rows = in_field(rows, mode.gaussian)
        return format_row(rows)
    values = take(seq, n)
    if whole:
        values = [make_all_whole(c) for c in values]
    else:
        values = [in_field(c, mode.gaussian) for c in values]
    return format_row(values, n)


def cmd_triangle(
    src: str,
    spec: list[int],
    mode: TriangleMode = "plain",
    whole: bool = False,
    field: Literal["rational", "gaussian"] = "rational",
) -> str:
    """
    Rows of a bivariate sequence, one per line:
      plain   rows of the coefficient table      e2o     with z-side factorials removed
      biv     diagonals as stored               bivE2o  diagonals after e2o
    """
    seq = evaluate(parse(src), EvalMode(field=field, arity="bivariate"))
    if mode == "plain":
        rows = un_diag(seq)
    elif mode == "e2o":
        rows = un_diag_e2o(seq)
    elif mode == "biv":
        rows = seq
    elif mode == "bivE2o":
        rows = diag_e2o(seq)
    else:
        raise ValueError(f"unknown triangle mode {mode!r}")
    table = select_w(spec, rows) if whole else in_field(select(spec, rows), field == "gaussian")
    return format_rows(table)


def cmd_list_names() -> str:
    """`name = definition` per entry: core sequences, then univariate, then bivariate."""
    core_names = {c.value for c in CoreName}

    def group(entry) -> int:
        if entry.name in core_names:
            return 0
        return 2 if is_bivariate_name(entry.name) else 1

    entries = sorted(registry_entries(), key=lambda e: (group(e), e.name))
    return "\n".join(e.definition for e in entries)


def cmd_check(suite: str) -> SuiteReport:
    return run_suite(suite)


def format_report(report: SuiteReport) -> str:
    lines = [f"PASS {name}" for name in report.passed]
    lines += [f"FAIL {name}" for name in report.failed]
    lines.append(report.summary())
    return "\n".join(lines)
