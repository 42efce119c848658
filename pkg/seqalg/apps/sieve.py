"""
Moessner's sieve and its generalisation to Long's and Paasche's theorems.

The sieve is a chain of bivariate triangles s_0, s_1, ... in diagonal form,
starting at Pascal's triangle p = (u+z)*. One step reads a diagonal
rho = [rho_0..rho_m] of the current triangle as h(z,1) = rho_0 + ... + rho_m z^m
and multiplies it into p. In the generalised form (`ksmlp`) the next h is
the diagonal of degree deg(h) + d_n of h(z,1)*p, and the leading coefficients
c_n of the successive h are the result:

  h_0 = 1,        d = [r,0,0,...]     c_n = n^r               (Moessner)
  h_0 = b+(a-b)z, d = [r,0,0,...]     c_n = (a+(n-1)b) n^r    (Long)
  h_0 = 1,        d = [d_0,d_1,...]   c_n = prod (n-i)^(d_i)  (Paasche)
"""

import logging
from typing import Any

from pydantic import BaseModel, ConfigDict, Field, NonNegativeInt, field_validator

from seqalg.bivariate import diagonals, named_bivariate, pad_tri, x2z
from seqalg.coeff import as_coeff, make_whole
from seqalg.seq_core import Seq, take

logger = logging.getLogger(__name__)


class SieveSpec(BaseModel):
    """Initial h_0(z,1) as a coefficient list, and the degree increments d."""

    model_config = ConfigDict(arbitrary_types_allowed=True, frozen=True)

    h0: list[Any] = Field(min_length=1)
    d: list[NonNegativeInt]

    @field_validator("h0", mode="before")
    @classmethod
    def _exact(cls, value: Any) -> list[Any]:
        return [as_coeff(c) for c in value]


def _pascal() -> Seq:
    return named_bivariate("pascal")


def _diagonal(s: Seq, degree: int) -> list[Any]:
    return take(pad_tri(s).nth(degree), degree + 1)


def _step(h: list[Any], d: int) -> list[Any]:
    return _diagonal(x2z(h) * _pascal(), len(h) - 1 + d)


def ksmlp(spec: SieveSpec, count: int) -> list[Any]:
    """Leading coefficients c_0..c_(count-1); needs count-1 increments."""
    if count - 1 > len(spec.d):
        raise ValueError(f"{count} coefficients need {count - 1} increments, got {len(spec.d)}")
    h = list(spec.h0)
    out = []
    for n in range(count):
        out.append(h[-1])
        if n < count - 1:
            h = _step(h, spec.d[n])
    logger.debug("ksmlp: %d leading coefficients", count)
    return out


def _whole_tail(spec: SieveSpec, count: int) -> list[int]:
    return [make_whole(c) for c in ksmlp(spec, count + 1)[1:]]


def moessner(r: int, count: int) -> list[int]:
    """1^r, 2^r, ..., count^r."""
    return _whole_tail(SieveSpec(h0=[1], d=[r] + [0] * count), count)


def long(a: Any, b: Any, r: int, count: int) -> list[int]:
    """(a + (n-1) b) n^r for n = 1..count."""
    b = as_coeff(b)
    return _whole_tail(SieveSpec(h0=[b, as_coeff(a) - b], d=[r] + [0] * count), count)


def paasche_fac(count: int) -> list[int]:
    """d = [1,1,...]: the factorials 1!, 2!, ..."""
    return _whole_tail(SieveSpec(h0=[1], d=[1] * count), count)


def super_fac(count: int) -> list[int]:
    """d = [1,2,3,...]: the superfactorials 1, 2, 12, 288, ..."""
    return _whole_tail(SieveSpec(h0=[1], d=list(range(1, count + 1))), count)


def moessner_triangles(r: int, shape: list[int]) -> list[list[list[Any]]]:
    """Triangles s_0, s_1, ...; triangle i is cut to its first shape[i] diagonals."""
    out = []
    s = _pascal()
    for i, width in enumerate(shape):
        out.append([[make_whole(c) for c in row] for row in diagonals(s, width)])
        if i < len(shape) - 1:
            s = x2z(_diagonal(s, r)) * _pascal()
    return out


def moessner_rows(r: int, count: int) -> list[list[int]]:
    """rho_0 = [1], rho_(n+1) = diagonal r of x2z(rho_n) * p."""
    rows = []
    rho: list[Any] = [as_coeff(1)]
    for n in range(count):
        rows.append([make_whole(c) for c in rho])
        if n < count - 1:
            rho = _diagonal(x2z(rho) * _pascal(), r)
    return rows
