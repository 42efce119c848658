"""
Evaluation of parsed expressions to sequences.

Names resolve in this order: the variables (x, and u/z in bivariate mode,
i in gaussian mode), then the named-sequence registries. Every node's value
is wrapped so that a library error raised while it is being built, or later
while one of its coefficients is demanded, names the innermost offending
subexpression.
"""

from __future__ import annotations

import logging
from typing import Any, Callable, Literal

from pydantic import BaseModel, ConfigDict

from seqalg.bivariate import (
    U,
    Z,
    du,
    dz,
    is_bivariate_name,
    is_univariate_name,
    maclaurin,
    named_bivariate,
    named_univariate,
    taylor,
    ue2o_diagonals,
    un_diag,
    un_diag_e2o,
)
from seqalg.calculus import deriv, e2o, integ, log_seq, o2e, pow_f, xcth
from seqalg.cli.syntax import Add, BinOp, Call, Compose, Div, Expr, Mul, Name, Neg, Num, Pow, Sub, render
from seqalg.coeff import I, Gaussian, as_coeff, divide, make_whole
from seqalg.discrete import delta, h2i, hadamard, i2h, infiltration, prefix_sums, shuffle, shuffle_inv, sigma
from seqalg.errors import ArityError, ModeError, SeqAlgError, UnknownName
from seqalg.seq_core import X, Seq, annotate_errors, compose, const, converse, sqroot, tail

logger = logging.getLogger(__name__)


class EvalMode(BaseModel):
    model_config = ConfigDict(frozen=True)

    field: Literal["rational", "gaussian"] = "rational"
    arity: Literal["univariate", "bivariate"] = "univariate"

    @property
    def bivariate(self) -> bool:
        return self.arity == "bivariate"

    @property
    def gaussian(self) -> bool:
        return self.field == "gaussian"

    def describe(self) -> str:
        return f"{self.field}/{self.arity}"


_UNARY: dict[str, Callable[[Seq], Seq]] = {
    "deriv": deriv,
    "integ": integ,
    "sqroot": sqroot,
    "converse": converse,
    "e2o": e2o,
    "o2e": o2e,
    "lg": log_seq,
    "delta": delta,
    "sigma": sigma,
    "h2i": h2i,
    "i2h": i2h,
    "tail": tail,
    "shInv": shuffle_inv,
    "prefixSums": prefix_sums,
    "maclaurin": maclaurin,
    "dz": dz,
    "du": du,
    "unDiag": un_diag,
    "unDiagE2o": un_diag_e2o,
    "ue2o": ue2o_diagonals,
    "taylor": taylor,
}

_BINARY: dict[str, Callable[[Seq, Seq], Seq]] = {
    "shuffle": shuffle,
    "hadamard": hadamard,
    "infiltration": infiltration,
}

# Functions whose second (or only) argument is a scalar.
_SCALAR_ARG = {"pow", "xcth"}

_BIVARIATE_ONLY = {"dz", "du", "unDiag", "unDiagE2o", "ue2o", "taylor"}

FUNCTIONS = frozenset(_UNARY) | frozenset(_BINARY) | frozenset(_SCALAR_ARG)


class Evaluator:
    def __init__(self, mode: EvalMode) -> None:
        self.mode = mode

    def evaluate(self, expr: Expr) -> Seq:
        where = render(expr)
        try:
            value = self._eval(expr)
        except SeqAlgError as exc:
            if exc.subexpression is None:
                exc.subexpression = where
            raise
        return annotate_errors(value, where)

    # ---------------------------------------------------------------------------
    # Sequences
    # ---------------------------------------------------------------------------
    def _eval(self, expr: Expr) -> Seq:
        if isinstance(expr, Num):
            return const(expr.value)
        if isinstance(expr, Name):
            return self._name(expr.name)
        if isinstance(expr, Neg):
            return -self.evaluate(expr.operand)
        if isinstance(expr, Pow):
            return self.evaluate(expr.left) ** self.exponent(expr.right)
        if isinstance(expr, Compose):
            return compose(self.evaluate(expr.left), self.evaluate(expr.right))
        if isinstance(expr, BinOp):
            left, right = self.evaluate(expr.left), self.evaluate(expr.right)
            if isinstance(expr, Add):
                return left + right
            if isinstance(expr, Sub):
                return left - right
            if isinstance(expr, Mul):
                return left * right
            if isinstance(expr, Div):
                return left / right
        if isinstance(expr, Call):
            return self._call(expr)
        raise TypeError(f"not an expression: {expr!r}")

    def _name(self, name: str) -> Seq:
        if name == "x":
            return X
        if name in ("u", "z"):
            if not self.mode.bivariate:
                raise ModeError(f"{name!r} is only defined in bivariate mode (--biv)")
            return U if name == "u" else Z
        if name == "i":
            if not self.mode.gaussian:
                raise ModeError("'i' is only defined with --field gaussian")
            return const(I)
        if is_univariate_name(name):
            return named_univariate(name)
        if is_bivariate_name(name):
            if not self.mode.bivariate:
                raise ModeError(f"{name!r} is bivariate; use --biv")
            return named_bivariate(name)
        raise UnknownName(f"unknown name {name!r}")

    def _call(self, call: Call) -> Seq:
        name, args = call.name, call.args
        if name not in FUNCTIONS:
            raise UnknownName(f"unknown function {name!r}")
        if name in _BIVARIATE_ONLY and not self.mode.bivariate:
            raise ModeError(f"{name} needs bivariate mode (--biv)")
        arity = 2 if name in _BINARY or name == "pow" else 1
        if len(args) != arity:
            raise ArityError(f"{name} takes {arity} argument(s), got {len(args)}")
        if name == "pow":
            return pow_f(self.evaluate(args[0]), self.scalar(args[1]))
        if name == "xcth":
            return xcth(self.scalar(args[0]))
        if name in _BINARY:
            return _BINARY[name](self.evaluate(args[0]), self.evaluate(args[1]))
        return _UNARY[name](self.evaluate(args[0]))

    # ---------------------------------------------------------------------------
    # Scalars (exponents and scalar arguments)
    # ---------------------------------------------------------------------------
    def scalar(self, expr: Expr) -> Any:
        return self._attributed(self._scalar, expr)

    def exponent(self, expr: Expr) -> int:
        return self._attributed(self._exponent, expr)

    @staticmethod
    def _attributed(fn: Callable[[Expr], Any], expr: Expr) -> Any:
        try:
            return fn(expr)
        except SeqAlgError as exc:
            if exc.subexpression is None:
                exc.subexpression = render(expr)
            raise

    def _scalar(self, expr: Expr) -> Any:
        if isinstance(expr, Num):
            return as_coeff(expr.value)
        if isinstance(expr, Name) and expr.name == "i":
            if not self.mode.gaussian:
                raise ModeError("'i' is only defined with --field gaussian")
            return I
        if isinstance(expr, Neg):
            return -self._scalar(expr.operand)
        if isinstance(expr, Pow):
            return self._scalar(expr.left) ** self._exponent(expr.right)
        if isinstance(expr, (Add, Sub, Mul, Div)):
            a, b = self._scalar(expr.left), self._scalar(expr.right)
            if isinstance(expr, Add):
                return a + b
            if isinstance(expr, Sub):
                return a - b
            if isinstance(expr, Mul):
                return a * b
            return divide(a, b)
        raise UnknownName(f"expected a constant, got {render(expr)!r}")

    def _exponent(self, expr: Expr) -> int:
        value = self._scalar(expr)
        if isinstance(value, Gaussian):
            raise ModeError("exponents must be integers")
        return make_whole(value)


def evaluate(expr: Expr, mode: EvalMode | None = None) -> Seq:
    """The sequence `expr` denotes in `mode` (rational, univariate by default)."""
    mode = mode or EvalMode()
    logger.debug("evaluating %s in %s mode", render(expr), mode.describe())
    return Evaluator(mode).evaluate(expr)
