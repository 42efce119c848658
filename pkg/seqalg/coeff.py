"""
Exact coefficient fields.

Rational is the standard library's Fraction (arbitrary precision, always in
lowest terms with a positive denominator). Gaussian is a pair of Fractions
with the ring product (a+bi)(c+di) = (ac-bd) + (ad+bc)i and division by the
conjugate over the norm.

Integers entering the kernel are normalized to Fraction by `as_coeff`, so
`/` between coefficients never falls back to float division.
"""

from __future__ import annotations

import logging
import operator
from fractions import Fraction
from numbers import Rational as _RationalABC
from typing import Any, Callable, Iterable, Union

from seqalg.errors import DivideByZero, NotReal, NotWhole

logger = logging.getLogger(__name__)

Rational = Fraction

ZERO = Fraction(0)
ONE = Fraction(1)

_OPS: dict[str, Callable[[Any, Any], Any]] = {
    "add": operator.add,
    "sub": operator.sub,
    "mul": operator.mul,
    "div": operator.truediv,
}


class Gaussian:
    """A Gaussian rational re + im·i."""

    __slots__ = ("re", "im")

    def __init__(self, re: Any = 0, im: Any = 0) -> None:
        self.re = Fraction(re)
        self.im = Fraction(im)

    # ---------------------------------------------------------------------------
    # Coercion
    # ---------------------------------------------------------------------------
    @staticmethod
    def _coerce(other: Any) -> "Gaussian | None":
        if isinstance(other, Gaussian):
            return other
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return Gaussian(other, 0)
        return None

    # ---------------------------------------------------------------------------
    # Ring operations
    # ---------------------------------------------------------------------------
    def __add__(self, other: Any) -> "Gaussian":
        g = self._coerce(other)
        if g is None:
            return NotImplemented
        return Gaussian(self.re + g.re, self.im + g.im)

    __radd__ = __add__

    def __sub__(self, other: Any) -> "Gaussian":
        g = self._coerce(other)
        if g is None:
            return NotImplemented
        return Gaussian(self.re - g.re, self.im - g.im)

    def __rsub__(self, other: Any) -> "Gaussian":
        g = self._coerce(other)
        if g is None:
            return NotImplemented
        return g - self

    def __mul__(self, other: Any) -> "Gaussian":
        g = self._coerce(other)
        if g is None:
            return NotImplemented
        return Gaussian(self.re * g.re - self.im * g.im, self.re * g.im + self.im * g.re)

    __rmul__ = __mul__

    def __truediv__(self, other: Any) -> "Gaussian":
        g = self._coerce(other)
        if g is None:
            return NotImplemented
        norm = g.re * g.re + g.im * g.im
        if norm == 0:
            raise DivideByZero("division by the Gaussian zero")
        return Gaussian(
            (self.re * g.re + self.im * g.im) / norm,
            (self.im * g.re - self.re * g.im) / norm,
        )

    def __rtruediv__(self, other: Any) -> "Gaussian":
        g = self._coerce(other)
        if g is None:
            return NotImplemented
        return g / self

    def __neg__(self) -> "Gaussian":
        return Gaussian(-self.re, -self.im)

    def __pos__(self) -> "Gaussian":
        return self

    def __pow__(self, n: int) -> "Gaussian":
        if not isinstance(n, int):
            return NotImplemented
        if n < 0:
            return ONE / (self ** -n)
        result = Gaussian(1, 0)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def conjugate(self) -> "Gaussian":
        return Gaussian(self.re, -self.im)

    def norm(self) -> Fraction:
        return self.re * self.re + self.im * self.im

    # ---------------------------------------------------------------------------
    # Equality: componentwise, with the rationals embedded at im = 0
    # ---------------------------------------------------------------------------
    def __eq__(self, other: object) -> bool:
        g = self._coerce(other)
        if g is None:
            return NotImplemented
        return self.re == g.re and self.im == g.im

    def __hash__(self) -> int:
        if self.im == 0:
            return hash(self.re)
        return hash((self.re, self.im))

    def __bool__(self) -> bool:
        return bool(self.re) or bool(self.im)

    def __repr__(self) -> str:
        return f"Gaussian({self.re!s}, {self.im!s})"


I = Gaussian(0, 1)

Coefficient = Union[Fraction, Gaussian]


# ---------------------------------------------------------------------------
# Field operations
# ---------------------------------------------------------------------------

def as_coeff(value: Any) -> Any:
    """Normalize a scalar: ints become Fractions; Fractions, Gaussians and sequences pass through."""
    if isinstance(value, bool):
        raise TypeError("booleans are not coefficients")
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, (Fraction, Gaussian)):
        return value
    if isinstance(value, _RationalABC):
        return Fraction(value.numerator, value.denominator)
    if isinstance(value, float):
        raise TypeError("floating-point coefficients are not supported; use Fraction")
    return value


def divide(a: Any, b: Any) -> Any:
    """Exact a / b; a zero divisor raises DivideByZero."""
    try:
        return as_coeff(a) / as_coeff(b)
    except DivideByZero:
        raise
    except ZeroDivisionError as exc:
        raise DivideByZero("division by zero") from exc


def rat_arith(a: Any, b: Any, op: str) -> Fraction:
    if op not in _OPS:
        raise ValueError(f"unknown operation {op!r}")
    a, b = Fraction(a), Fraction(b)
    if op == "div":
        return divide(a, b)
    return _OPS[op](a, b)


def _to_gaussian(value: Any) -> Gaussian:
    g = Gaussian._coerce(as_coeff(value))
    if g is None:
        raise TypeError(f"not a Gaussian rational: {value!r}")
    return g


def gauss_arith(a: Any, b: Any, op: str) -> Gaussian:
    if op not in _OPS:
        raise ValueError(f"unknown operation {op!r}")
    a, b = _to_gaussian(a), _to_gaussian(b)
    if op == "div":
        return divide(a, b)
    return _OPS[op](a, b)


def make_whole(value: Any) -> int:
    """The integer value of a coefficient whose denominator is 1."""
    if isinstance(value, bool):
        raise TypeError("booleans are not coefficients")
    if isinstance(value, int):
        return value
    if isinstance(value, Gaussian):
        if value.im != 0:
            raise NotWhole(f"not whole: {value!r}")
        value = value.re
    if isinstance(value, Fraction):
        if value.denominator != 1:
            raise NotWhole(f"not whole: {value}")
        return value.numerator
    raise NotWhole(f"not whole: {value!r}")


def make_real(value: Any) -> Fraction:
    """Real projection of a Gaussian with zero imaginary part."""
    if isinstance(value, Gaussian):
        if value.im != 0:
            raise NotReal(f"not real: {value!r}")
        return value.re
    return Fraction(as_coeff(value))


def make_all_real(values: Iterable[Any]) -> list[Fraction]:
    return [make_real(v) for v in values]
