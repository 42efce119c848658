"""
Exact text rendering of coefficients and rows.

    Fraction   3, -1/2
    Gaussian   1+2i, 0-1/3i
    row        [1,-1/2,1/6]       (no spaces)
    diagonals  [[1],[1,1],[1,2,1]]
"""

from fractions import Fraction
from typing import Any, Iterable, Optional

from seqalg.coeff import Gaussian
from seqalg.seq_core import Seq, take


def format_rational(value: Fraction) -> str:
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


def format_coeff(value: Any, width: Optional[int] = None) -> str:
    """One coefficient; an infinite polynomial coefficient is cut to `width` terms."""
    if isinstance(value, Seq):
        if value.length is None:
            if width is None:
                raise ValueError("an infinite coefficient needs a width")
            return format_row(take(value, width))
        return format_row(value.coefficients(), width)
    if isinstance(value, (list, tuple)):
        return format_row(value, width)
    if isinstance(value, Gaussian):
        sign = "-" if value.im < 0 else "+"
        return f"{format_rational(value.re)}{sign}{format_rational(abs(value.im))}i"
    if isinstance(value, bool):
        raise TypeError("booleans are not coefficients")
    if isinstance(value, int):
        return str(value)
    return format_rational(Fraction(value))


def in_field(value: Any, gaussian: bool) -> Any:
    """Coefficients of a gaussian-field run all render as a+bi."""
    if not gaussian or isinstance(value, (Gaussian, Seq)):
        return value
    if isinstance(value, (list, tuple)):
        return [in_field(c, True) for c in value]
    return Gaussian(value, 0)


def format_row(values: Iterable[Any], width: Optional[int] = None) -> str:
    return "[" + ",".join(format_coeff(v, width) for v in values) + "]"


def format_rows(rows: Iterable[Iterable[Any]]) -> str:
    """One bracketed row per line."""
    return "\n".join(format_row(row) for row in rows)
