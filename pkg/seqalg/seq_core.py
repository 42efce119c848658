"""
Lazy sequence engine.

A Seq is a cell holding a per-index producer, a write-once memo and an
optional finite length. Coefficients past a finite length read as zero, so
a polynomial is just a finite Seq and the empty Seq is the zero sequence.

Laziness contract:
  - nth(f, n) is computed at most once per cell and index and memoized.
  - While index n of a cell is being computed it is marked in-progress for
    the current thread; re-entering it raises NonProductive. This is what
    makes `fix` safe: a recursive definition either produces or fails fast.
  - mul never demands its right operand at index j when the matching left
    coefficient is exactly zero. `fix(b -> 1 + X*b**2)` relies on this.

When both operands of an operation are finite and fully computed the result
is computed eagerly; everything else is built lazily. Coefficients may be
Fractions, Gaussians or finite Seqs (polynomials, used by the bivariate
module), mixed freely through Python's operator protocol.
"""

from __future__ import annotations

import itertools
import logging
import threading
from fractions import Fraction
from typing import Any, Callable, Iterable, Iterator, Optional

from seqalg.coeff import ONE, ZERO, Gaussian, as_coeff, divide, make_whole
from seqalg.errors import (
    DivideByZero,
    InfiniteInput,
    NonProductive,
    NonTerminatingComposition,
    NotASquareRootDomain,
    NotConversible,
    SeqAlgError,
)

logger = logging.getLogger(__name__)

# Leading zeros cancelled before div and sqroot give up on an infinite operand.
ZERO_SCAN_LIMIT = 512

Producer = Callable[[int], Any]

_demand = threading.local()


def _active() -> set[tuple[int, int]]:
    """(cell id, index) pairs currently being computed on this thread."""
    active = getattr(_demand, "active", None)
    if active is None:
        active = set()
        _demand.active = active
    return active


def _is_scalar(value: Any) -> bool:
    return isinstance(value, (int, Fraction, Gaussian)) and not isinstance(value, bool)


def _normalize(value: Any) -> Any:
    if isinstance(value, (list, tuple)):
        return Seq.from_coeffs(value)
    return as_coeff(value)


class Seq:
    """A memoized, lazily computed coefficient stream."""

    __slots__ = ("_producer", "_memo", "length", "label")

    def __init__(
        self,
        producer: Optional[Producer] = None,
        length: Optional[int] = None,
        label: str = "seq",
        memo: Optional[dict[int, Any]] = None,
    ) -> None:
        self._producer = producer
        self._memo: dict[int, Any] = memo if memo is not None else {}
        self.length = length
        self.label = label

    # ---------------------------------------------------------------------------
    # Construction
    # ---------------------------------------------------------------------------
    @classmethod
    def from_coeffs(cls, coeffs: Iterable[Any], infinite_tail_zero: bool = False, label: str = "poly") -> "Seq":
        values = [_normalize(c) for c in coeffs]
        memo = dict(enumerate(values))
        if infinite_tail_zero:
            return cls(lambda n: ZERO, None, label, memo)
        return cls(None, len(values), label, memo)

    @classmethod
    def placeholder(cls, label: str = "fix") -> "Seq":
        """An unbound cell; `bind` attaches its definition later."""
        return cls(None, None, label)

    @classmethod
    def deferred(cls, thunk: Callable[[], "Seq"], label: str = "deferred") -> "Seq":
        """A cell whose definition is built on first demand."""
        cell = cls.placeholder(label)
        target: list[Seq] = []

        def produce(n: int) -> Any:
            if not target:
                target.append(thunk())
            return target[0].nth(n)

        cell._producer = produce
        return cell

    def bind(self, target: "Seq") -> "Seq":
        if self._producer is not None or self._memo:
            raise ValueError(f"{self.label} is already bound")
        self.length = target.length
        self._producer = target.nth
        return self

    # ---------------------------------------------------------------------------
    # Coefficient access
    # ---------------------------------------------------------------------------
    def nth(self, n: int) -> Any:
        if n < 0:
            raise IndexError(f"negative index {n}")
        if self.length is not None and n >= self.length:
            return ZERO
        memo = self._memo
        if n in memo:
            return memo[n]
        if self._producer is None:
            raise NonProductive(f"{self.label} was demanded before its definition was bound")
        key = (id(self), n)
        active = _active()
        if key in active:
            raise NonProductive(f"coefficient {n} of {self.label} demands itself")
        active.add(key)
        try:
            value = self._producer(n)
        finally:
            active.discard(key)
        return memo.setdefault(n, value)

    @property
    def is_finite(self) -> bool:
        return self.length is not None

    def concrete(self) -> Optional[list[Any]]:
        """All coefficients if finite and already computed, else None."""
        if self.length is None or len(self._memo) < self.length:
            return None
        memo = self._memo
        try:
            return [memo[k] for k in range(self.length)]
        except KeyError:
            return None

    def coefficients(self) -> list[Any]:
        if self.length is None:
            raise InfiniteInput(f"{self.label} is infinite")
        return [self.nth(k) for k in range(self.length)]

    def __getitem__(self, key: Any) -> Any:
        if isinstance(key, slice):
            stop = key.stop if key.stop is not None else self.length
            if stop is None:
                raise InfiniteInput("open-ended slice of an infinite sequence")
            return [self.nth(k) for k in range(*slice(key.start, stop, key.step).indices(stop))]
        return self.nth(key)

    def __iter__(self) -> Iterator[Any]:
        indices = range(self.length) if self.length is not None else itertools.count()
        for k in indices:
            yield self.nth(k)

    def __repr__(self) -> str:
        size = "inf" if self.length is None else str(self.length)
        return f"<Seq {self.label} len={size} known={len(self._memo)}>"

    # ---------------------------------------------------------------------------
    # Operator protocol (scalars lift to constant sequences)
    # ---------------------------------------------------------------------------
    def __add__(self, other: Any) -> "Seq":
        g = lift(other)
        return NotImplemented if g is None else add(self, g)

    def __radd__(self, other: Any) -> "Seq":
        g = lift(other)
        return NotImplemented if g is None else add(g, self)

    def __sub__(self, other: Any) -> "Seq":
        g = lift(other)
        return NotImplemented if g is None else add(self, neg(g))

    def __rsub__(self, other: Any) -> "Seq":
        g = lift(other)
        return NotImplemented if g is None else add(g, neg(self))

    def __neg__(self) -> "Seq":
        return neg(self)

    def __pos__(self) -> "Seq":
        return self

    def __mul__(self, other: Any) -> "Seq":
        if _is_scalar(other):
            return scalar_mul(other, self)
        return mul(self, other) if isinstance(other, Seq) else NotImplemented

    def __rmul__(self, other: Any) -> "Seq":
        if _is_scalar(other):
            return scalar_mul(other, self)
        return mul(other, self) if isinstance(other, Seq) else NotImplemented

    def __truediv__(self, other: Any) -> "Seq":
        if _is_scalar(other):
            return scalar_mul(divide(ONE, other), self)
        return div(self, other) if isinstance(other, Seq) else NotImplemented

    def __rtruediv__(self, other: Any) -> "Seq":
        g = lift(other)
        return NotImplemented if g is None else div(g, self)

    def __pow__(self, n: Any) -> "Seq":
        if not isinstance(n, int) or isinstance(n, bool):
            return NotImplemented
        if n < 0:
            return div(ONE_SEQ, self ** -n)
        if n == 0:
            return ONE_SEQ
        result = self
        for _ in range(n - 1):
            result = mul(result, self)
        return result


# ---------------------------------------------------------------------------
# Coefficient helpers (uniform over scalars and polynomial coefficients)
# ---------------------------------------------------------------------------

def lift(value: Any) -> Optional[Seq]:
    if isinstance(value, Seq):
        return value
    if _is_scalar(value):
        return Seq.from_coeffs([value], label="const")
    return None


def const(value: Any) -> Seq:
    seq = lift(value)
    if seq is None:
        raise TypeError(f"cannot lift {value!r} to a sequence")
    return seq


def as_poly(value: Any) -> Seq:
    """A coefficient as a polynomial; a scalar c becomes [c]."""
    return value if isinstance(value, Seq) else Seq.from_coeffs([value])


def is_zero(value: Any) -> bool:
    if isinstance(value, Seq):
        if value.length is None:
            return False
        return all(is_zero(value.nth(k)) for k in range(value.length))
    return value == 0


def is_one(value: Any) -> bool:
    if isinstance(value, Seq):
        if not value.length:
            return False
        return is_one(value.nth(0)) and all(is_zero(value.nth(k)) for k in range(1, value.length))
    return value == 1


def coeff_eq(a: Any, b: Any) -> bool:
    if isinstance(a, Seq) or isinstance(b, Seq):
        pa, pb = as_poly(a), as_poly(b)
        if pa.length is None or pb.length is None:
            raise InfiniteInput("cannot compare infinite coefficients")
        return all(coeff_eq(pa.nth(k), pb.nth(k)) for k in range(max(pa.length, pb.length)))
    return a == b


def make_all_whole(value: Any) -> Any:
    if isinstance(value, Seq):
        return [make_all_whole(c) for c in value.coefficients()]
    return make_whole(value)


def _trim(values: list[Any]) -> list[Any]:
    end = len(values)
    while end and is_zero(values[end - 1]):
        end -= 1
    return values[:end]


def _at(values: list[Any], k: int) -> Any:
    return values[k] if k < len(values) else ZERO


def _poly(values: list[Any], label: str = "poly") -> Seq:
    return Seq(None, len(values), label, dict(enumerate(values)))


def _convolve(f: list[Any], g: list[Any]) -> list[Any]:
    if not f or not g:
        return []
    out = []
    for n in range(len(f) + len(g) - 1):
        acc = None
        for k in range(max(0, n - len(g) + 1), min(n, len(f) - 1) + 1):
            a = f[k]
            if is_zero(a):
                continue
            term = a * g[n - k]
            acc = term if acc is None else acc + term
        out.append(ZERO if acc is None else acc)
    return out


def seq_map(fn: Callable[[Any], Any], f: Seq, label: str = "map") -> Seq:
    """Coefficient-wise map, preserving finiteness."""
    values = f.concrete()
    if values is not None:
        return _poly([fn(c) for c in values], label)
    return Seq(lambda n: fn(f.nth(n)), f.length, label)


def trim(p: Seq) -> Seq:
    """Canonical form of a polynomial: trailing zeros removed."""
    if p.length is None:
        raise InfiniteInput("cannot trim an infinite sequence")
    return _poly(_trim(p.coefficients()))


# ---------------------------------------------------------------------------
# Ring with division
# ---------------------------------------------------------------------------

def add(f: Seq, g: Seq) -> Seq:
    if f.length is not None and g.length is not None:
        cf, cg = f.concrete(), g.concrete()
        if cf is not None and cg is not None:
            return _poly([_at(cf, k) + _at(cg, k) for k in range(max(len(cf), len(cg)))], "sum")
        length: Optional[int] = max(f.length, g.length)
    else:
        length = None
    return Seq(lambda n: f.nth(n) + g.nth(n), length, "sum")


def neg(f: Seq) -> Seq:
    return seq_map(lambda c: -c, f, "neg")


def sub(f: Seq, g: Seq) -> Seq:
    return add(f, neg(g))


def scalar_mul(a: Any, f: Seq) -> Seq:
    a = as_coeff(a)
    return seq_map(lambda c: a * c, f, "scaled")


def mul(f: Seq, g: Seq) -> Seq:
    if f.length == 0 or g.length == 0:
        return _poly([])
    if f.length is not None and g.length is not None:
        cf, cg = f.concrete(), g.concrete()
        if cf is not None and cg is not None:
            return _poly(_convolve(cf, cg), "product")
        length: Optional[int] = f.length + g.length - 1
    else:
        length = None

    def produce(n: int) -> Any:
        acc = None
        for k in range(n + 1):
            if f.length is not None and k >= f.length:
                break
            j = n - k
            if g.length is not None and j >= g.length:
                continue
            a = f.nth(k)
            if is_zero(a):
                continue
            term = a * g.nth(j)
            acc = term if acc is None else acc + term
        return ZERO if acc is None else acc

    return Seq(produce, length, "product")


def _leading_zero_shift(f: Seq, g: Seq) -> int:
    """Cancel leading zeros pairwise; the count of cancelled positions."""
    s = 0
    while True:
        if g.length is not None and s >= g.length:
            raise DivideByZero("division by the zero sequence")
        if s >= ZERO_SCAN_LIMIT:
            logger.warning("div: no nonzero divisor coefficient within %d terms", s)
            raise DivideByZero(f"no nonzero divisor coefficient within {s} terms")
        if not is_zero(g.nth(s)):
            if s:
                logger.debug("div: cancelled %d leading zeros", s)
            return s
        if not is_zero(f.nth(s)):
            raise DivideByZero("nonzero numerator coefficient over a zero divisor head")
        s += 1


def _exact_quotient(f: list[Any], g: list[Any]) -> Optional[list[Any]]:
    """Polynomial quotient when it terminates, else None."""
    f, g = _trim(f), _trim(g)
    if not g:
        raise DivideByZero("division by the zero polynomial")
    s = 0
    while is_zero(g[s]):
        if not is_zero(_at(f, s)):
            raise DivideByZero("nonzero numerator coefficient over a zero divisor head")
        s += 1
    f, g = _trim(f[s:]), g[s:]
    if not f:
        return []
    size = len(f) - len(g) + 1
    if size <= 0:
        return None
    q: list[Any] = []
    for n in range(size):
        acc = f[n]
        for k in range(max(0, n - len(g) + 1), n):
            if not is_zero(q[k]):
                acc = acc - q[k] * g[n - k]
        q.append(divide(acc, g[0]))
    product = _convolve(q, g)
    if all(coeff_eq(_at(product, k), _at(f, k)) for k in range(max(len(product), len(f)))):
        return q
    return None


def div(f: Seq, g: Seq) -> Seq:
    if g.length == 0:
        raise DivideByZero("division by the empty sequence")
    if f.length == 0:
        return _poly([])
    cf, cg = f.concrete(), g.concrete()
    if cf is not None and cg is not None:
        exact = _exact_quotient(cf, cg)
        if exact is not None:
            return _poly(exact, "quotient")

    shift: list[int] = []
    q = Seq(None, None, "quotient")

    def produce(n: int) -> Any:
        if not shift:
            shift.append(_leading_zero_shift(f, g))
        s = shift[0]
        acc = f.nth(n + s)
        for k in range(n):
            j = n - k + s
            if g.length is not None and j >= g.length:
                continue
            qk = q.nth(k)
            if is_zero(qk):
                continue
            acc = acc - qk * g.nth(j)
        return divide(acc, g.nth(s))

    q._producer = produce
    return q


# ---------------------------------------------------------------------------
# Shifts and prefixes
# ---------------------------------------------------------------------------

def tail(f: Seq) -> Seq:
    return drop(f, 1)


def cons(head: Any, rest: Seq, label: str = "cons") -> Seq:
    """head + x*rest, without demanding rest until index 1."""
    head = as_coeff(head)
    length = None if rest.length is None else rest.length + 1
    return Seq(lambda n: head if n == 0 else rest.nth(n - 1), length, label)


def drop(f: Seq, k: int) -> Seq:
    """E^k f: the sequence with its first k coefficients removed."""
    if k == 0:
        return f
    length = None if f.length is None else max(f.length - k, 0)
    values = f.concrete()
    if values is not None:
        return _poly(values[k:], "tail")
    return Seq(lambda n: f.nth(n + k), length, "tail")


def truncate(f: Seq, k: int) -> Seq:
    """The first k coefficients as a polynomial."""
    length = k if f.length is None else min(k, f.length)
    values = f.concrete()
    if values is not None:
        return _poly(values[:length], "truncated")
    return Seq(lambda n: f.nth(n), length, "truncated")


def take(f: Seq, n: int) -> list[Any]:
    return [f.nth(k) for k in range(n)]


def take_whole(f: Seq, n: int) -> list[Any]:
    return [make_all_whole(c) for c in take(f, n)]


def prefix_eq(f: Seq, g: Seq, n: int) -> bool:
    return all(coeff_eq(f.nth(k), g.nth(k)) for k in range(n))


def reverse_poly(p: Seq) -> Seq:
    if p.length is None:
        raise InfiniteInput("reverse_poly needs a finite sequence")
    return _poly(list(reversed(_trim(p.coefficients()))), "reversed")


def from_coeffs(coeffs: Iterable[Any], infinite_tail_zero: bool = False) -> Seq:
    return Seq.from_coeffs(coeffs, infinite_tail_zero)


def nth(f: Seq, n: int) -> Any:
    return f.nth(n)


ZERO_SEQ = Seq.from_coeffs([], label="zero")
ONE_SEQ = Seq.from_coeffs([1], label="one")
X = Seq.from_coeffs([0, 1], label="x")


# ---------------------------------------------------------------------------
# Fixpoints, roots, composition
# ---------------------------------------------------------------------------

def fix(builder: Callable[[Seq], Any], label: str = "fix") -> Seq:
    """
    Solve s = builder(s). The builder receives a placeholder handle and must
    be productive: index n of the result may only demand indices < n of the
    handle (after mul's zero short-circuit).
    """
    cell = Seq.placeholder(label)
    cell.bind(const(builder(cell)))
    logger.debug("fixpoint %s bound", label)
    return cell


def sqroot(f: Seq) -> Seq:
    values = f.concrete()
    if values is not None and all(is_zero(c) for c in values):
        return _poly([])

    def build() -> Seq:
        s = 0
        while is_zero(f.nth(s)):
            if not is_zero(f.nth(s + 1)):
                raise NotASquareRootDomain(f"odd order {s + 1}: no square root")
            s += 2
            if s >= ZERO_SCAN_LIMIT:
                raise NotASquareRootDomain(f"no nonzero coefficient within {s} terms")
        head = f.nth(s)
        if not is_one(head):
            raise NotASquareRootDomain(f"head {head!r} after removing leading zeros is not 1")
        rest = tail(drop(f, s))
        root = fix(lambda r: 1 + X * (rest / (1 + r)), label="sqroot")
        return root if s == 0 else mul(X ** (s // 2), root)

    return Seq.deferred(build, "sqroot")


def compose(f: Seq, g: Seq) -> Seq:
    """
    f o g = sum f_k g^k. Needs g_0 = 0 unless f is finite; an infinite f over
    a nonzero g_0 raises NonTerminatingComposition on first demand.
    """
    if f.length == 0:
        return _poly([])
    if f.length is not None and g.length is not None:
        length: Optional[int] = 1 if g.length == 0 else (f.length - 1) * (g.length - 1) + 1
    else:
        length = None

    powers: list[Seq] = [ONE_SEQ]
    head_is_zero: list[bool] = []

    def power(k: int) -> Seq:
        while len(powers) <= k:
            powers.append(g if len(powers) == 1 else mul(powers[-1], g))
        return powers[k]

    def produce(n: int) -> Any:
        if not head_is_zero:
            zero_head = is_zero(g.nth(0))
            if not zero_head and f.length is None:
                raise NonTerminatingComposition(
                    "composition of an infinite sequence with a nonzero-headed sequence"
                )
            head_is_zero.append(zero_head)
        top = n if head_is_zero[0] else f.length - 1
        if f.length is not None:
            top = min(top, f.length - 1)
        acc = None
        for k in range(top + 1):
            fk = f.nth(k)
            if is_zero(fk):
                continue
            term = fk * power(k).nth(n)
            acc = term if acc is None else acc + term
        return ZERO if acc is None else acc

    return Seq(produce, length, "composition")


def converse(f: Seq) -> Seq:
    """Compositional inverse g with f o g = x."""
    if not is_zero(f.nth(0)):
        raise NotConversible("converse needs a zero head")
    if is_zero(f.nth(1)):
        raise NotConversible("converse needs an invertible linear coefficient")
    rest = tail(f)
    return fix(lambda g: X * (1 / compose(rest, g)), label="converse")


def annotate_errors(f: Seq, where: str) -> Seq:
    """
    The same sequence (sharing its memo) whose on-demand errors carry `where`
    as their subexpression unless an inner cell already attached one.
    """

    def produce(n: int) -> Any:
        try:
            return f.nth(n)
        except SeqAlgError as exc:
            if exc.subexpression is None:
                exc.subexpression = where
            raise

    return Seq(produce, f.length, f.label, f._memo)
