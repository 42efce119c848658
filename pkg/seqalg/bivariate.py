"""
Bivariate sequences in diagonal representation, and the named counting
sequences.

A bivariate b(z,u) is stored as a univariate Seq whose coefficient n is the
homogeneous polynomial s_n = b_{0,n} + b_{1,n-1} x + ... + b_{n,0} x^n, so
[u^k z^n] b = [x^n] s_{n+k}. The engine in seq_core works unchanged over
these polynomial coefficients; this module only adds the views:

  u = [[0],[1,0]]     z = [[0],[0,1]]
  un_diag      rows of the b_{n,k} table (row n holds [u^k z^n] over k)
  un_diag_e2o  same, with the z-side factorials removed first
  select       row i cut to spec[i] entries

Diagonals coming out of exact division are trimmed, so every view that reads
a diagonal by position pads it to n+1 entries first.
"""

from __future__ import annotations

import logging
import math
import threading
from fractions import Fraction
from typing import Any, Callable, Iterable, Literal

from pydantic import BaseModel, ConfigDict

from seqalg.calculus import CORE_DEFINITIONS, CoreName, core, deriv, e2o, log_seq, o2e, pow_f
from seqalg.errors import UnknownName
from seqalg.seq_core import (
    X,
    Seq,
    as_poly,
    compose,
    fix,
    is_zero,
    make_all_whole,
    seq_map,
    sqroot,
    tail,
    take,
)

logger = logging.getLogger(__name__)

U = Seq.from_coeffs([[0], [1, 0]], label="u")
Z = Seq.from_coeffs([[0], [0, 1]], label="z")


def biv_u() -> Seq:
    return U


def biv_z() -> Seq:
    return Z


def biv_const(c: Any) -> Seq:
    """The constant [[c]]."""
    return Seq.from_coeffs([[c]], label="biv_const")


def x2z(rho: Iterable[Any]) -> Seq:
    """rho_0 + rho_1 z + rho_2 z^2 + ... in diagonal form."""
    coeffs = rho.coefficients() if isinstance(rho, Seq) else list(rho)
    return Seq.from_coeffs([[0] * k + [c] for k, c in enumerate(coeffs)], label="x2z")


def _pad(c: Any, d: int) -> Seq:
    p = as_poly(c)
    length = d + 1 if p.length is None else max(d + 1, p.length)
    return Seq(p.nth, length, "diagonal")


def pad_tri(s: Seq) -> Seq:
    """Pad diagonal d with zeros to at least d+1 entries."""
    return Seq(lambda d: _pad(s.nth(d), d), s.length, "pad_tri")


def transpose(tri: Seq) -> Seq:
    """Rows of a (possibly infinite) padded triangle: row n is k -> tri[n+k][n]."""
    size = tri.length

    def row(n: int) -> Seq:
        length = None if size is None else size - n
        return Seq(lambda k: as_poly(tri.nth(n + k)).nth(n), length, "row")

    return Seq(row, size, "rows")


def un_diag(s: Seq) -> Seq:
    return transpose(pad_tri(s))


def un_diag_e2o(s: Seq) -> Seq:
    return un_diag(seq_map(lambda c: e2o(as_poly(c)), s, "diag_e2o"))


def diag_e2o(s: Seq) -> Seq:
    """e2o applied to every diagonal."""
    return seq_map(lambda c: e2o(as_poly(c)), s, "diag_e2o")


def _rows(rows: Seq, spec: list[int]) -> Iterable[tuple[Seq, int]]:
    for i, width in enumerate(spec):
        if rows.length is not None and i >= rows.length:
            return
        yield as_poly(rows.nth(i)), width


def select(spec: Iterable[int], rows: Seq) -> list[list[Any]]:
    return [take(row, width) for row, width in _rows(rows, list(spec))]


def select_w(spec: Iterable[int], rows: Seq) -> list[list[int]]:
    return [[make_all_whole(c) for c in take(row, width)] for row, width in _rows(rows, list(spec))]


def all_zeros(spec: Iterable[int], rows: Seq) -> bool:
    return all(is_zero(c) for row in select(spec, rows) for c in row)


def take_biv(spec: Iterable[int], s: Seq) -> list[list[Any]]:
    return select(spec, un_diag(s))


def take_biv_w(spec: Iterable[int], s: Seq) -> list[list[int]]:
    return select_w(spec, un_diag(s))


def take_ebiv(spec: Iterable[int], s: Seq) -> list[list[Any]]:
    return select(spec, un_diag_e2o(s))


def take_ebiv_w(spec: Iterable[int], s: Seq) -> list[list[int]]:
    return select_w(spec, un_diag_e2o(s))


def diagonals(s: Seq, count: int) -> list[list[Any]]:
    """The first `count` diagonals, each exactly d+1 entries."""
    return [take(_pad(s.nth(d), d), d + 1) for d in range(count)]


# ---------------------------------------------------------------------------
# Partial derivatives, Maclaurin and Taylor
# ---------------------------------------------------------------------------

def _reverse_exact(p: Seq) -> Seq:
    return Seq.from_coeffs(list(reversed(p.coefficients())), label="reversed")


def dz(s: Seq) -> Seq:
    return seq_map(lambda c: deriv(as_poly(c)), tail(s), "dz")


def du(s: Seq) -> Seq:
    return seq_map(lambda c: _reverse_exact(deriv(_reverse_exact(c))), tail(pad_tri(s)), "du")


def ue2o(p: Seq) -> Seq:
    """u-side factorial removal on one diagonal: reverse . e2o . reverse."""
    return _reverse_exact(e2o(_reverse_exact(p)))


def ue2o_diagonals(s: Seq) -> Seq:
    """ue2o on every diagonal; entry i of diagonal d gains the factor (d-i)!."""

    def scale(d: int) -> Seq:
        diag = _pad(s.nth(d), d)
        return Seq.from_coeffs([diag.nth(i) * math.factorial(d - i) for i in range(d + 1)])

    return Seq(scale, s.length, "ue2o")


def _derivatives(f: Seq) -> Callable[[int], Seq]:
    chain = [f]

    def nth_deriv(k: int) -> Seq:
        while len(chain) <= k:
            chain.append(deriv(chain[-1]))
        return chain[k]

    return nth_deriv


def maclaurin(f: Seq) -> Seq:
    """o2e of the heads of f, Df, D^2 f, ..."""
    nth_deriv = _derivatives(f)
    return o2e(Seq(lambda n: nth_deriv(n).nth(0), None, "derivative_heads"))


def taylor(f: Seq) -> Seq:
    """sum_k (D^k f o u) z^k / k! in diagonal form."""
    nth_deriv = _derivatives(f)
    shifted: list[Seq] = []

    def at_u(k: int) -> Seq:
        while len(shifted) <= k:
            shifted.append(compose(nth_deriv(len(shifted)), U))
        return shifted[k]

    def produce(d: int) -> Any:
        acc: Any = Seq.from_coeffs([])
        for k in range(d + 1):
            diag = as_poly(at_u(k).nth(d - k))
            acc = acc + X ** k * diag
        return o2e(acc)

    return Seq(produce, None, "taylor")


# ---------------------------------------------------------------------------
# Named sequences
# ---------------------------------------------------------------------------

class RegistryEntry(BaseModel):
    model_config = ConfigDict(frozen=True)

    name: str
    definition: str
    arity: Literal["univariate", "bivariate"]


_UNIVARIATE: dict[str, tuple[str, Callable[[], Seq]]] = {}
_BIVARIATE: dict[str, tuple[str, Callable[[], Seq]]] = {}
_BUILT: dict[tuple[str, str], Seq] = {}
_LOCK = threading.RLock()
_CORE_NAMES = frozenset(c.value for c in CoreName)


def _register(table: dict, name: str, definition: str) -> Callable[[Callable[[], Seq]], Callable[[], Seq]]:
    def wrap(builder: Callable[[], Seq]) -> Callable[[], Seq]:
        table[name] = (definition, builder)
        return builder

    return wrap


def _univariate(name: str, definition: str):
    return _register(_UNIVARIATE, name, definition)


def _bivariate(name: str, definition: str):
    return _register(_BIVARIATE, name, definition)


def _lookup(table: dict, arity: str, name: str) -> Seq:
    if name not in table:
        raise UnknownName(f"unknown {arity} sequence {name!r}")
    key = (arity, name)
    with _LOCK:
        seq = _BUILT.get(key)
        if seq is None:
            seq = table[name][1]()
            _BUILT[key] = seq
            logger.debug("registry: built %s sequence %s", arity, name)
    return seq


def named_univariate(name: str) -> Seq:
    if name in _CORE_NAMES:
        return core(name)
    return _lookup(_UNIVARIATE, "univariate", name)


def named_bivariate(name: str) -> Seq:
    return _lookup(_BIVARIATE, "bivariate", name)


def registry_entries() -> list[RegistryEntry]:
    """Every named sequence with its defining expression."""
    entries = [RegistryEntry(name=k.value, definition=v, arity="univariate") for k, v in CORE_DEFINITIONS.items()]
    entries += [RegistryEntry(name=k, definition=v[0], arity="univariate") for k, v in _UNIVARIATE.items()]
    entries += [RegistryEntry(name=k, definition=v[0], arity="bivariate") for k, v in _BIVARIATE.items()]
    return entries


def is_univariate_name(name: str) -> bool:
    return name in _UNIVARIATE or name in _CORE_NAMES


def is_bivariate_name(name: str) -> bool:
    return name in _BIVARIATE


_u = named_univariate
_b = named_bivariate


def _starx() -> Seq:
    return core(CoreName.STARX)


def _expx() -> Seq:
    return core(CoreName.EXPX)


# Univariate counting sequences.

@_univariate("emptySet", "emptySet = 1")
def _empty_set() -> Seq:
    return Seq.from_coeffs([1])


@_univariate("singletonSet", "singletonSet = x")
def _singleton_set() -> Seq:
    return X


@_univariate("singletonList", "singletonList = x")
def _singleton_list() -> Seq:
    return X


@_univariate("list", "list = starx")
def _list() -> Seq:
    return _starx()


@_univariate("set", "set = expx")
def _set() -> Seq:
    return _expx()


@_univariate("perm", "perm = starx")
def _perm() -> Seq:
    return _starx()


@_univariate("nonEmptyList", "nonEmptyList = list - 1")
def _non_empty_list() -> Seq:
    return _u("list") - 1


@_univariate("pluralList", "pluralList = list - singletonList - 1")
def _plural_list() -> Seq:
    return _u("list") - X - 1


@_univariate("ordPair", "ordPair = x^2")
def _ord_pair() -> Seq:
    return X ** 2


@_univariate("fibonacci", "fibonacci = list o (singletonList + ordPair)")
def _fibonacci() -> Seq:
    return compose(_u("list"), X + X ** 2)


@_univariate("cycle", "cycle = lg(starx)")
def _cycle() -> Seq:
    return log_seq(_starx())


@_univariate("oneCycle", "oneCycle = x")
def _one_cycle() -> Seq:
    return X


@_univariate("oneOrTwoCycle", "oneOrTwoCycle = oneCycle + x^2/2")
def _one_or_two_cycle() -> Seq:
    return X + X ** 2 / 2


@_univariate("involution", "involution = set o oneOrTwoCycle")
def _involution() -> Seq:
    return compose(_u("set"), _u("oneOrTwoCycle"))


@_univariate("nonLoopCycle", "nonLoopCycle = cycle - singletonSet")
def _non_loop_cycle() -> Seq:
    return _u("cycle") - X


@_univariate("derangement", "derangement = set o nonLoopCycle")
def _derangement() -> Seq:
    return compose(_u("set"), _u("nonLoopCycle"))


@_univariate("permutation", "permutation = derangement*set")
def _permutation() -> Seq:
    return _u("derangement") * _u("set")


@_univariate("nonEmptySet", "nonEmptySet = set - emptySet")
def _non_empty_set() -> Seq:
    return _u("set") - 1


@_univariate("pluralSet", "pluralSet = nonEmptySet - singletonSet")
def _plural_set() -> Seq:
    return _u("nonEmptySet") - X


@_univariate("setPartition", "setPartition = set o nonEmptySet")
def _set_partition() -> Seq:
    return compose(_u("set"), _u("nonEmptySet"))


@_univariate("oddNumberOfParts", "oddNumberOfParts = sinhx o nonEmptySet")
def _odd_number_of_parts() -> Seq:
    return compose(core(CoreName.SINHX), _u("nonEmptySet"))


@_univariate("evenSizedParts", "evenSizedParts = set o (coshx - 1)")
def _even_sized_parts() -> Seq:
    return compose(_u("set"), core(CoreName.COSHX) - 1)


@_univariate("catalan", "catalan = 1 + x*catalan^2")
def _catalan() -> Seq:
    return fix(lambda b: 1 + X * b ** 2, label="catalan")


@_univariate("catalanTree", "catalanTree = x*(list o catalanTree)")
def _catalan_tree() -> Seq:
    return fix(lambda c: X * compose(_u("list"), c), label="catalanTree")


@_univariate("cayleyTree", "cayleyTree = x*(set o cayleyTree)")
def _cayley_tree() -> Seq:
    return fix(lambda t: X * compose(_u("set"), t), label="cayleyTree")


@_univariate("connectedAcyclicGraph", "connectedAcyclicGraph = cayleyTree - cayleyTree^2/2")
def _connected_acyclic_graph() -> Seq:
    t = _u("cayleyTree")
    return t - t ** 2 / 2


@_univariate("acyclicGraph", "acyclicGraph = set o connectedAcyclicGraph")
def _acyclic_graph() -> Seq:
    return compose(_u("set"), _u("connectedAcyclicGraph"))


@_univariate("motzkinTree", "motzkinTree = x*(1 + motzkinTree + motzkinTree^2)")
def _motzkin_tree() -> Seq:
    return fix(lambda m: X * (1 + m + m ** 2), label="motzkinTree")


@_univariate("hipparchusSchroeder", "hipparchusSchroeder = (1 + x - sqroot(1 - 6*x + x^2))/4")
def _hipparchus_schroeder() -> Seq:
    return (1 + X - sqroot(1 - 6 * X + X ** 2)) / 4


@_univariate("largeSchroeder", "largeSchroeder = 2*hipparchusSchroeder/x - 1")
def _large_schroeder() -> Seq:
    return 2 * _u("hipparchusSchroeder") / X - 1


@_univariate("connectedMapping", "connectedMapping = cycle o cayleyTree")
def _connected_mapping() -> Seq:
    return compose(_u("cycle"), _u("cayleyTree"))


@_univariate("mapping", "mapping = set o connectedMapping")
def _mapping() -> Seq:
    return compose(_u("set"), _u("connectedMapping"))


@_univariate("fixedPointFree", "fixedPointFree = set o nonLoopCycle o cayleyTree")
def _fixed_point_free() -> Seq:
    return compose(compose(_u("set"), _u("nonLoopCycle")), _u("cayleyTree"))


@_univariate("idempotent", "idempotent = set o (oneCycle*set)")
def _idempotent() -> Seq:
    return compose(_u("set"), X * _u("set"))


@_univariate("partialMapping", "partialMapping = mapping*(set o cayleyTree)")
def _partial_mapping() -> Seq:
    return _u("mapping") * compose(_u("set"), _u("cayleyTree"))


@_univariate("surjection", "surjection = list o nonEmptySet")
def _surjection() -> Seq:
    return compose(_u("list"), _u("nonEmptySet"))


@_univariate("zigzag", "zigzag = 2*(tanx + secx)")
def _zigzag() -> Seq:
    return 2 * (core(CoreName.TANX) + core(CoreName.SECX))


@_univariate("bernoulli", "bernoulli = x/(expx - 1)")
def _bernoulli() -> Seq:
    return X / (_expx() - 1)


# Bivariate counting sequences.

@_bivariate("pascal", "pascal = starx o (u + z)")
def _pascal() -> Seq:
    return compose(_starx(), U + Z)


@_bivariate("intComposition", "intComposition = list o (u*(nonEmptyList o z))")
def _int_composition() -> Seq:
    return compose(_u("list"), U * compose(_u("nonEmptyList"), Z))


@_bivariate("schroeder", "schroeder = z + u*(pluralList o schroeder)")
def _schroeder() -> Seq:
    return fix(lambda s: Z + U * compose(_u("pluralList"), s), label="schroeder")


@_bivariate("catalanLeaves", "catalanLeaves = u*z + z*(nonEmptyList o catalanLeaves)")
def _catalan_leaves() -> Seq:
    return fix(lambda c: U * Z + Z * compose(_u("nonEmptyList"), c), label="catalanLeaves")


@_bivariate("cayleyLeaves", "cayleyLeaves = u*z + z*(nonEmptySet o cayleyLeaves)")
def _cayley_leaves() -> Seq:
    return fix(lambda c: U * Z + Z * compose(_u("nonEmptySet"), c), label="cayleyLeaves")


@_bivariate("ebinom", "ebinom = set o (z + u*z)")
def _ebinom() -> Seq:
    return compose(_u("set"), Z + U * Z)


@_bivariate("cycles", "cycles = set o (u*(cycle o z))")
def _cycles() -> Seq:
    return compose(_u("set"), U * compose(_u("cycle"), Z))


@_bivariate("parts", "parts = set o (u*(nonEmptySet o z))")
def _parts() -> Seq:
    return compose(_u("set"), U * compose(_u("nonEmptySet"), Z))


@_bivariate("permFixedPts", "permFixedPts = (derangement o z)*(set o (u*z))")
def _perm_fixed_pts() -> Seq:
    return compose(_u("derangement"), Z) * compose(_u("set"), U * Z)


@_bivariate("zigzags", "zigzags = ((sinx o u) + (cosx o u))/(cosx o (u + z))")
def _zigzags() -> Seq:
    sinx, cosx = core(CoreName.SINX), core(CoreName.COSX)
    return (compose(sinx, U) + compose(cosx, U)) / compose(cosx, U + Z)


@_bivariate("ascents", "ascents = list o (z + (pluralSet o (u*z - z))/(u - 1))")
def _ascents() -> Seq:
    return compose(_u("list"), Z + compose(_u("pluralSet"), U * Z - Z) / (U - 1))


@_bivariate("valleys", "valleys = sqroot(1 - u)/(sqroot(1 - u) - (tanhx o (z*sqroot(1 - u))))")
def _valleys() -> Seq:
    r = sqroot(1 - U)
    return r / (r - compose(core(CoreName.TANHX), Z * r))


@_bivariate("powerSums", "powerSums = ((expx o (u*z)) - 1)/((expx o z) - 1)")
def _power_sums() -> Seq:
    return (compose(_expx(), U * Z) - 1) / (compose(_expx(), Z) - 1)


@_bivariate("bernoulliPoly", "bernoulliPoly = (z*(expx o (u*z)))/((expx o z) - 1)")
def _bernoulli_poly() -> Seq:
    return (Z * compose(_expx(), U * Z)) / (compose(_expx(), Z) - 1)


@_bivariate("legendre", "legendre = pow(1 - 2*u*z + z^2, -1/2)")
def _legendre() -> Seq:
    return pow_f(1 - 2 * U * Z + Z ** 2, Fraction(-1, 2))


@_bivariate("chebyshev", "chebyshev = (1 - u*z)/(z^2 - 2*u*z + 1)")
def _chebyshev() -> Seq:
    return (1 - U * Z) / (Z ** 2 - 2 * U * Z + 1)


@_bivariate("laguerre", "laguerre = (1/(1 - z))*(expx o ((-u*z)/(1 - z)))")
def _laguerre() -> Seq:
    return (1 / (1 - Z)) * compose(_expx(), (-(U * Z)) / (1 - Z))


@_bivariate("hermite", "hermite = expx o (2*u*z - z^2)")
def _hermite() -> Seq:
    return compose(_expx(), 2 * U * Z - Z ** 2)


@_bivariate("meixner", "meixner = pow(1 + z^2, -1/2)*(expx o (u*(atanx o z)))")
def _meixner() -> Seq:
    return pow_f(1 + Z ** 2, Fraction(-1, 2)) * compose(_expx(), U * compose(core(CoreName.ATANX), Z))


@_bivariate("logan", "logan = ((sinx o z) + u*(cosx o z))/((cosx o z) - u*(sinx o z))")
def _logan() -> Seq:
    sin_z = compose(core(CoreName.SINX), Z)
    cos_z = compose(core(CoreName.COSX), Z)
    return (sin_z + U * cos_z) / (cos_z - U * sin_z)
