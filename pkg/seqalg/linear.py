"""
Linear recurrences and small matrices.

A recurrence b(E)s = 0 with b = b_0 + b_1 x + ... + b_k x^k and initial
terms s_0..s_(k-1) has the rational solution

    s = (rev(b) * inits)[0..k-1] / rev(b)

where rev(b) = b_k + b_(k-1) x + ... + b_0 x^k. Matrices are dense and
square; entries are coefficients or sequences, and every operation goes
through the entries' own `+` and `*`.
"""

from __future__ import annotations

import functools
import logging
from typing import Any, Iterable, Optional, Sequence

from pydantic import BaseModel, ConfigDict, field_validator, model_validator

from seqalg.calculus import o2e
from seqalg.coeff import ONE, ZERO, as_coeff
from seqalg.errors import DegenerateRecurrence, DimensionMismatch
from seqalg.seq_core import Seq, as_poly, coeff_eq, is_zero, trim, truncate

logger = logging.getLogger(__name__)

MAX_MATRIX_DIM = 8


def _entry(value: Any) -> Any:
    if isinstance(value, (list, tuple)):
        return Seq.from_coeffs(value)
    return value if isinstance(value, Seq) else as_coeff(value)


class Matrix:
    """Dense square matrix over coefficients or sequences."""

    __slots__ = ("rows",)

    def __init__(self, rows: Iterable[Iterable[Any]]) -> None:
        data = [[_entry(v) for v in row] for row in rows]
        n = len(data)
        if n == 0 or any(len(row) != n for row in data):
            raise DimensionMismatch("matrix must be square and non-empty")
        if n > MAX_MATRIX_DIM:
            raise DimensionMismatch(f"dimension {n} exceeds the limit {MAX_MATRIX_DIM}")
        self.rows = data

    @property
    def dim(self) -> int:
        return len(self.rows)

    @classmethod
    def zero(cls, n: int) -> "Matrix":
        return cls([[ZERO] * n for _ in range(n)])

    @classmethod
    def diagonal(cls, r: Any, n: int) -> "Matrix":
        r = _entry(r)
        return cls([[r if i == j else ZERO for j in range(n)] for i in range(n)])

    @classmethod
    def identity(cls, n: int) -> "Matrix":
        return cls.diagonal(ONE, n)

    def __getitem__(self, index: tuple[int, int]) -> Any:
        i, j = index
        return self.rows[i][j]

    def _same_dim(self, other: "Matrix") -> None:
        if not isinstance(other, Matrix) or other.dim != self.dim:
            raise DimensionMismatch("matrix dimensions differ")

    def __add__(self, other: "Matrix") -> "Matrix":
        self._same_dim(other)
        return Matrix([[a + b for a, b in zip(r, s)] for r, s in zip(self.rows, other.rows)])

    def __sub__(self, other: "Matrix") -> "Matrix":
        self._same_dim(other)
        return Matrix([[a - b for a, b in zip(r, s)] for r, s in zip(self.rows, other.rows)])

    def __neg__(self) -> "Matrix":
        return Matrix([[-a for a in r] for r in self.rows])

    def __mul__(self, other: Any) -> "Matrix":
        if not isinstance(other, Matrix):
            return mat_scalar(other, self)
        self._same_dim(other)
        n = self.dim
        out = []
        for i in range(n):
            row = []
            for j in range(n):
                acc: Any = ZERO
                for k in range(n):
                    a = self.rows[i][k]
                    if is_zero(a):
                        continue
                    acc = acc + a * other.rows[k][j]
                row.append(acc)
            out.append(row)
        return Matrix(out)

    def __rmul__(self, other: Any) -> "Matrix":
        return mat_scalar(other, self)

    def __pow__(self, n: int) -> "Matrix":
        if n < 0:
            raise ValueError("negative matrix powers are not supported")
        result = Matrix.identity(self.dim)
        for _ in range(n):
            result = result * self
        return result

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Matrix) or other.dim != self.dim:
            return NotImplemented
        return all(coeff_eq(a, b) for r, s in zip(self.rows, other.rows) for a, b in zip(r, s))

    __hash__ = None  # type: ignore[assignment]

    def transpose(self) -> "Matrix":
        return Matrix([list(col) for col in zip(*self.rows)])

    def __repr__(self) -> str:
        return f"Matrix({self.rows!r})"


def mat_arith(a: Matrix, b: Matrix, op: str) -> Matrix:
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    raise ValueError(f"unknown matrix operation {op!r}")


def mat_scalar(c: Any, a: Matrix) -> Matrix:
    c = _entry(c)
    return Matrix([[c * v for v in row] for row in a.rows])


# ---------------------------------------------------------------------------
# Recurrences
# ---------------------------------------------------------------------------

class Lode(BaseModel):
    """b(E)s = 0 with initial terms; b is listed from the constant term up."""

    model_config = ConfigDict(arbitrary_types_allowed=True, frozen=True)

    b: list[Any]
    inits: list[Any]

    @field_validator("b", "inits", mode="before")
    @classmethod
    def _coefficients(cls, value: Any) -> list[Any]:
        if isinstance(value, Seq):
            value = value.coefficients()
        return [_entry(v) for v in value]

    @model_validator(mode="after")
    def _order_matches_inits(self) -> "Lode":
        if len(self.b) < 2:
            raise ValueError("b must have degree at least 1")
        if len(self.b) - 1 != len(self.inits):
            raise ValueError(f"degree {len(self.b) - 1} needs {len(self.b) - 1} initial terms, got {len(self.inits)}")
        return self

    @property
    def order(self) -> int:
        return len(self.b) - 1


def klarner_solve(lode: Lode) -> Seq:
    k = lode.order
    if is_zero(lode.b[k]):
        raise DegenerateRecurrence("leading coefficient of b is zero")
    rb = Seq.from_coeffs(list(reversed(lode.b)), label="rev_b")
    numerator = truncate(rb * Seq.from_coeffs(lode.inits), k)
    logger.debug("klarner: order %d", k)
    return numerator / rb


def lode_to_ode_bridge(lode: Lode) -> Seq:
    """Maclaurin solution of b(D)f = 0 with f^(i)(0) = inits[i]."""
    return o2e(klarner_solve(lode))


def satisfies_recurrence(s: Seq, b: Sequence[Any], n_terms: int) -> bool:
    """sum_j b_j s_(n+j) = 0 for n < n_terms."""
    for n in range(n_terms):
        acc: Any = ZERO
        for j, bj in enumerate(b):
            acc = acc + bj * s.nth(n + j)
        if not is_zero(acc):
            return False
    return True


# ---------------------------------------------------------------------------
# Star, characteristic polynomial, exponential
# ---------------------------------------------------------------------------

def kleene_star(a: Matrix) -> Matrix:
    """(Ax)*: entry (i,j) is n -> (A^n)_ij."""
    powers = [Matrix.identity(a.dim)]

    def power(n: int) -> Matrix:
        while len(powers) <= n:
            powers.append(powers[-1] * a)
        return powers[n]

    def entry(i: int, j: int) -> Seq:
        return Seq(lambda n: power(n)[i, j], None, f"star[{i},{j}]")

    return Matrix([[entry(i, j) for j in range(a.dim)] for i in range(a.dim)])


def star_matrices(s: Matrix, count: int) -> list[Matrix]:
    """The first `count` coefficient matrices of a matrix of sequences."""
    return [Matrix([[entry.nth(t) for entry in row] for row in s.rows]) for t in range(count)]


def _laplace(entries: list[list[Any]]) -> Any:
    n = len(entries)

    @functools.lru_cache(maxsize=None)
    def minor(row: int, cols: tuple[int, ...]) -> Any:
        if row == n:
            return ONE
        acc: Any = ZERO
        for idx, c in enumerate(cols):
            e = entries[row][c]
            if is_zero(e):
                continue
            term = e * minor(row + 1, cols[:idx] + cols[idx + 1:])
            acc = acc + term if idx % 2 == 0 else acc - term
        return acc

    return minor(0, tuple(range(n)))


def det(a: Matrix) -> Any:
    return _laplace(a.rows)


def char_poly(a: Matrix) -> Seq:
    """det(xI - A), monic of degree dim A."""
    n = a.dim
    entries = [
        [Seq.from_coeffs([-a[i, j], 1] if i == j else [-a[i, j]]) for j in range(n)]
        for i in range(n)
    ]
    return trim(as_poly(_laplace(entries)))


def cayley_hamilton_check(a: Matrix, n_terms: int, b: Optional[Sequence[Any]] = None) -> bool:
    """Does b(E) annihilate every entry of (Ax)* through n_terms? b defaults to char_poly(A)."""
    coeffs = char_poly(a).coefficients() if b is None else [_entry(c) for c in b]
    star = kleene_star(a)
    ok = all(satisfies_recurrence(entry, coeffs, n_terms) for row in star.rows for entry in row)
    if not ok:
        logger.debug("cayley-hamilton: recurrence fails for dim %d", a.dim)
    return ok


def matrix_exp(a: Matrix) -> Matrix:
    """exp(Ax) as o2e of sum_i S_i A^i, each S_i a Klarner solution of char_poly(A)."""
    n = a.dim
    b = char_poly(a).coefficients()
    solutions = [klarner_solve(Lode(b=b, inits=[1 if j == i else 0 for j in range(n)])) for i in range(n)]
    powers = [a ** i for i in range(n)]
    total = Matrix.zero(n)
    for s_i, a_i in zip(solutions, powers):
        total = total + Matrix([[s_i * a_i[r, c] for c in range(n)] for r in range(n)])
    return Matrix([[o2e(entry) for entry in row] for row in total.rows])
