"""
Discrete calculus and the products that go with it.

  delta s    = tail s - s               sigma s = x * starx * s (always infinite)
  shuffle    (s*t)_n = sum_k C(n,k) s_k t_(n-k)
  hadamard   pointwise product
  h2i / i2h  Newton transform and its inverse, (1/(1+x)) and starx shuffled with s

Factorial polynomials are coefficient lists over the falling factorials
x^(k) = x(x-1)...(x-k+1); the basis change to and from monomials reads its
coefficients off the `parts` and `cycles` triangles of the bivariate
registry.
"""

from __future__ import annotations

import functools
import logging
import math
from fractions import Fraction
from typing import Any, Optional

from seqalg.bivariate import named_bivariate, take_ebiv
from seqalg.calculus import CoreName, core, o2e
from seqalg.coeff import ONE, ZERO, as_coeff, divide
from seqalg.errors import InfiniteInput
from seqalg.seq_core import (
    X,
    Seq,
    cons,
    fix,
    is_zero,
    prefix_eq,
    tail,
    trim,
    truncate,
)

logger = logging.getLogger(__name__)


def rep(a: Any) -> Seq:
    """The constant sequence a, a, a, ..."""
    a = as_coeff(a)
    return Seq(lambda n: a, None, "rep")


def delta(s: Seq) -> Seq:
    return tail(s) - s


def sigma(s: Seq) -> Seq:
    return X * core(CoreName.STARX) * s


def prefix_sums(s: Seq) -> Seq:
    """Running sums starting at 0; a finite input gives one extra term."""
    length = None if s.length is None else s.length + 1
    out = Seq(None, length, "prefix_sums")
    out._producer = lambda n: ZERO if n == 0 else out.nth(n - 1) + s.nth(n - 1)
    return out


def suffix_sums(p: Seq) -> Seq:
    if p.length is None:
        raise InfiniteInput("suffix_sums needs a finite sequence")
    values = list(reversed(p.coefficients()))
    sums = [ZERO]
    for c in values:
        sums.append(sums[-1] + c)
    return Seq.from_coeffs(list(reversed(sums)), label="suffix_sums")


def _product_length(s: Seq, t: Seq) -> Optional[int]:
    if s.length == 0 or t.length == 0:
        return 0
    if s.length is not None and t.length is not None:
        return s.length + t.length - 1
    return None


def shuffle(s: Seq, t: Seq) -> Seq:
    length = _product_length(s, t)
    if length == 0:
        return Seq.from_coeffs([])

    def produce(n: int) -> Any:
        acc = ZERO
        for k in range(n + 1):
            sk = s.nth(k)
            if is_zero(sk):
                continue
            acc = acc + math.comb(n, k) * sk * t.nth(n - k)
        return acc

    return Seq(produce, length, "shuffle")


def shuffle_ht(s: Seq, t: Seq) -> Seq:
    """Shuffle product by the head-tail rule (s*t)' = s'*t + s*t'."""
    length = _product_length(s, t)
    if length == 0:
        return Seq.from_coeffs([])

    @functools.lru_cache(maxsize=None)
    def term(i: int, j: int, n: int) -> Any:
        if n == 0:
            return s.nth(i) * t.nth(j)
        return term(i + 1, j, n - 1) + term(i, j + 1, n - 1)

    return Seq(lambda n: term(0, 0, n), length, "shuffle_ht")


def shuffle_inv(s: Seq) -> Seq:
    """Inverse under shuffle: (1/s0) : -(s' * inv * inv)."""
    head = divide(ONE, s.nth(0))
    rest = tail(s)
    return fix(lambda inv: cons(head, -shuffle(rest, shuffle(inv, inv))), label="shuffle_inv")


def hadamard(s: Seq, t: Seq) -> Seq:
    if s.length is None:
        length = t.length
    elif t.length is None:
        length = s.length
    else:
        length = min(s.length, t.length)
    return Seq(lambda n: s.nth(n) * t.nth(n), length, "hadamard")


def infiltration(s: Seq, t: Seq) -> Seq:
    """Head-tail rule (s^t)' = s'^t + s^t' + s'^t'."""
    length = _product_length(s, t)
    if length == 0:
        return Seq.from_coeffs([])

    @functools.lru_cache(maxsize=None)
    def term(i: int, j: int, n: int) -> Any:
        if n == 0:
            return s.nth(i) * t.nth(j)
        return term(i + 1, j, n - 1) + term(i, j + 1, n - 1) + term(i + 1, j + 1, n - 1)

    return Seq(lambda n: term(0, 0, n), length, "infiltration")


def h2i(s: Seq) -> Seq:
    return shuffle(1 / (1 + X), s)


def i2h(s: Seq) -> Seq:
    return shuffle(core(CoreName.STARX), s)


def rh2i(s: Seq) -> Seq:
    """Newton transform as s0 : rh2i(delta s)."""
    chain = [s]

    def produce(n: int) -> Any:
        while len(chain) <= n:
            chain.append(delta(chain[-1]))
        return chain[n].nth(0)

    return Seq(produce, None, "rh2i")


class Shuffle:
    """A sequence under the shuffle product: `*` shuffles, `**` is shuffle power."""

    __slots__ = ("seq",)

    def __init__(self, seq: Any) -> None:
        if isinstance(seq, Shuffle):
            seq = seq.seq
        elif not isinstance(seq, Seq):
            seq = Seq.from_coeffs([seq])
        self.seq = seq

    def __add__(self, other: Any) -> "Shuffle":
        return Shuffle(self.seq + Shuffle(other).seq)

    __radd__ = __add__

    def __sub__(self, other: Any) -> "Shuffle":
        return Shuffle(self.seq - Shuffle(other).seq)

    def __rsub__(self, other: Any) -> "Shuffle":
        return Shuffle(Shuffle(other).seq - self.seq)

    def __neg__(self) -> "Shuffle":
        return Shuffle(-self.seq)

    def __mul__(self, other: Any) -> "Shuffle":
        return Shuffle(shuffle(self.seq, Shuffle(other).seq))

    __rmul__ = __mul__

    def __truediv__(self, other: Any) -> "Shuffle":
        return self * Shuffle(other).inverse()

    def __rtruediv__(self, other: Any) -> "Shuffle":
        return Shuffle(other) * self.inverse()

    def __pow__(self, n: int) -> "Shuffle":
        if n < 0:
            return self.inverse() ** -n
        result = Shuffle(1)
        for _ in range(n):
            result = result * self
        return result

    def inverse(self) -> "Shuffle":
        return Shuffle(shuffle_inv(self.seq))

    def __repr__(self) -> str:
        return f"Shuffle({self.seq!r})"


# ---------------------------------------------------------------------------
# Falling factorials
# ---------------------------------------------------------------------------

def fall(n: Any, m: int) -> Any:
    """Falling factorial n(n-1)...(n-m+1); fall(n, 0) = 1."""
    n = as_coeff(n)
    result: Any = ONE
    for i in range(m):
        result = result * (n - i)
    return result


def factorials_scanl(count: int) -> list[Fraction]:
    """Factorials by running product over 1, 2, 3, ..."""
    out = [ONE]
    while len(out) < count:
        out.append(out[-1] * len(out))
    return out[:count]


def _finite_coeffs(p: Seq, what: str) -> list[Any]:
    if p.length is None:
        raise InfiniteInput(f"{what} needs a finite sequence")
    return p.coefficients()


def stirling_parts_rows(count: int) -> list[list[Any]]:
    """Rows 0..count-1 of n![u^k z^n] parts (second kind)."""
    return take_ebiv(list(range(1, count + 1)), named_bivariate("parts"))


def stirling_cycles_rows(count: int, signed: bool = False) -> list[list[Any]]:
    """Rows of n![u^k z^n] cycles (first kind); `signed` applies (-1)^(n-k)."""
    rows = take_ebiv(list(range(1, count + 1)), named_bivariate("cycles"))
    if not signed:
        return rows
    return [[c if (n - k) % 2 == 0 else -c for k, c in enumerate(row)] for n, row in enumerate(rows)]


def _combine_rows(coeffs: list[Any], rows: list[list[Any]]) -> Seq:
    out = [ZERO] * max((len(r) for r in rows), default=0)
    for c, row in zip(coeffs, rows):
        if is_zero(c):
            continue
        for k, entry in enumerate(row):
            out[k] = out[k] + c * entry
    return trim(Seq.from_coeffs(out))


def to_fac_poly(p: Seq) -> Seq:
    """Monomial coefficients to falling-factorial coefficients."""
    coeffs = _finite_coeffs(p, "to_fac_poly")
    return _combine_rows(coeffs, stirling_parts_rows(len(coeffs)))


def from_fac_poly(q: Seq) -> Seq:
    """Falling-factorial coefficients to monomial coefficients."""
    coeffs = _finite_coeffs(q, "from_fac_poly")
    return _combine_rows(coeffs, stirling_cycles_rows(len(coeffs), signed=True))


def gregory_newton(values: Seq, terms: Optional[int] = None) -> Seq:
    """Factorial-polynomial coefficients (delta^k p)(0)/k! from sampled values p(0..m)."""
    size = len(_finite_coeffs(values, "gregory_newton")) if terms is None else terms
    return o2e(truncate(h2i(values), size))


def eval_poly(p: Seq, a: Any) -> Any:
    acc: Any = ZERO
    for c in reversed(_finite_coeffs(p, "eval_poly")):
        acc = acc * a + c
    return acc


def eval_fac_poly(q: Seq, a: Any) -> Any:
    acc: Any = ZERO
    for k, c in enumerate(_finite_coeffs(q, "eval_fac_poly")):
        acc = acc + c * fall(a, k)
    return acc


def squares_fac_poly() -> Seq:
    """Newton form of the sums of squares 0, 1, 5, 14, 30, 55."""
    return gregory_newton(Seq.from_coeffs([0, 1, 5, 14, 30, 55]), terms=4)


def euler_expand_check(s: Seq, k_max: int, n_terms: int) -> bool:
    """Does sum_{k<=K} (delta^k s)_0 x^k/(1-x)^(k+1) reproduce s through n_terms?"""
    heads = rh2i(s)
    expansion: Seq = Seq.from_coeffs([])
    for k in range(k_max + 1):
        coeff = heads.nth(k)
        if is_zero(coeff):
            continue
        expansion = expansion + coeff * (X ** k / (1 - X) ** (k + 1))
    ok = prefix_eq(expansion, s, n_terms)
    logger.debug("euler expansion K=%d N=%d: %s", k_max, n_terms, ok)
    return ok
