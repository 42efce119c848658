"""
Differential and integral operators, the factorial transform pair
(e2o multiplies coefficient n by n!, o2e divides it back out) and the core
sequences.

Each core sequence is the solution of its defining differential equation,
built once with `fix` and shared afterwards:

  expx   = 1 + integ expx            starx  = 1 + x*starx
  lgnx   = integ (1/(1+x))           cosx   = 1 - integ sinx
  sinx   = integ cosx                tanx   = integ (1 + tanx^2)
  secx   = 1 + integ (secx*tanx)     coshx  = 1 + integ sinhx
  sinhx  = integ coshx               tanhx  = integ (1 - tanhx^2)
  gdx    = integ (1/coshx)           atanx  = integ (1/(1+x^2))
  asinx  = integ (1/sqroot (1-x^2))  xcotx  = (x*cosx)/sinx
  xcothx = (x*coshx)/sinhx
"""

from __future__ import annotations

import logging
import math
import threading
from enum import Enum
from fractions import Fraction
from typing import Any, Callable

from seqalg.coeff import ZERO, as_coeff
from seqalg.errors import NotLogDomain, UnknownName
from seqalg.seq_core import (
    X,
    Seq,
    compose,
    fix,
    is_one,
    scalar_mul,
    sqroot,
)

logger = logging.getLogger(__name__)


def _indexed(fn: Callable[[int, Any], Any], f: Seq, length: int | None, label: str) -> Seq:
    """Index-aware coefficient map."""
    values = f.concrete()
    if values is not None:
        return Seq(None, length, label, {n: fn(n, c) for n, c in enumerate(values)})
    return Seq(lambda n: fn(n, f.nth(n)), length, label)


facs = Seq(lambda n: Fraction(math.factorial(n)), None, "facs")
nats = Seq(lambda n: Fraction(n), None, "nats")
pos = Seq(lambda n: Fraction(n + 1), None, "pos")


def deriv(f: Seq) -> Seq:
    length = None if f.length is None else max(f.length - 1, 0)
    values = f.concrete()
    if values is not None:
        return Seq(None, length, "deriv", {n: (n + 1) * values[n + 1] for n in range(length)})
    return Seq(lambda n: (n + 1) * f.nth(n + 1), length, "deriv")


def integ(f: Seq) -> Seq:
    length = None if f.length is None else f.length + 1

    def produce(n: int) -> Any:
        if n == 0:
            return ZERO
        return f.nth(n - 1) * Fraction(1, n)

    values = f.concrete()
    if values is not None:
        return Seq(None, length, "integ", {n: produce(n) for n in range(length)})
    return Seq(produce, length, "integ")


def e2o(f: Seq) -> Seq:
    return _indexed(lambda n, c: math.factorial(n) * c, f, f.length, "e2o")


def o2e(f: Seq) -> Seq:
    return _indexed(lambda n, c: c * Fraction(1, math.factorial(n)), f, f.length, "o2e")


class CoreName(str, Enum):
    EXPX = "expx"
    STARX = "starx"
    LGNX = "lgnx"
    SINX = "sinx"
    COSX = "cosx"
    TANX = "tanx"
    SECX = "secx"
    SINHX = "sinhx"
    COSHX = "coshx"
    TANHX = "tanhx"
    GDX = "gdx"
    ATANX = "atanx"
    ASINX = "asinx"
    XCOTX = "xcotx"
    XCOTHX = "xcothx"


# Defining equations in expression syntax, listed by `seqalg names`.
CORE_DEFINITIONS: dict[CoreName, str] = {
    CoreName.EXPX: "expx = 1 + integ(expx)",
    CoreName.STARX: "starx = 1 + x*starx",
    CoreName.LGNX: "lgnx = integ(1/(1+x))",
    CoreName.SINX: "sinx = integ(cosx)",
    CoreName.COSX: "cosx = 1 - integ(sinx)",
    CoreName.TANX: "tanx = integ(1 + tanx^2)",
    CoreName.SECX: "secx = 1 + integ(secx*tanx)",
    CoreName.SINHX: "sinhx = integ(coshx)",
    CoreName.COSHX: "coshx = 1 + integ(sinhx)",
    CoreName.TANHX: "tanhx = integ(1 - tanhx^2)",
    CoreName.GDX: "gdx = integ(1/coshx)",
    CoreName.ATANX: "atanx = integ(1/(1+x^2))",
    CoreName.ASINX: "asinx = integ(1/sqroot(1-x^2))",
    CoreName.XCOTX: "xcotx = (x*cosx)/sinx",
    CoreName.XCOTHX: "xcothx = (x*coshx)/sinhx",
}


def _build_cosx() -> Seq:
    return fix(lambda c: 1 - integ(integ(c)), label="cosx")


def _build_coshx() -> Seq:
    return fix(lambda c: 1 + integ(integ(c)), label="coshx")


_BUILDERS: dict[CoreName, Callable[[], Seq]] = {
    CoreName.EXPX: lambda: fix(lambda e: 1 + integ(e), label="expx"),
    CoreName.STARX: lambda: fix(lambda s: 1 + X * s, label="starx"),
    CoreName.LGNX: lambda: integ(1 / (1 + X)),
    CoreName.COSX: _build_cosx,
    CoreName.SINX: lambda: integ(core(CoreName.COSX)),
    CoreName.COSHX: _build_coshx,
    CoreName.SINHX: lambda: integ(core(CoreName.COSHX)),
    CoreName.TANX: lambda: fix(lambda t: integ(1 + t ** 2), label="tanx"),
    CoreName.SECX: lambda: fix(lambda s: 1 + integ(s * core(CoreName.TANX)), label="secx"),
    CoreName.TANHX: lambda: fix(lambda t: integ(1 - t ** 2), label="tanhx"),
    CoreName.GDX: lambda: integ(1 / core(CoreName.COSHX)),
    CoreName.ATANX: lambda: integ(1 / (1 + X ** 2)),
    CoreName.ASINX: lambda: integ(1 / sqroot(1 - X ** 2)),
    CoreName.XCOTX: lambda: (X * core(CoreName.COSX)) / core(CoreName.SINX),
    CoreName.XCOTHX: lambda: (X * core(CoreName.COSHX)) / core(CoreName.SINHX),
}

_CORE: dict[CoreName, Seq] = {}
_CORE_LOCK = threading.RLock()


def core(name: CoreName | str) -> Seq:
    """The shared core sequence called `name`."""
    try:
        key = CoreName(name)
    except ValueError:
        raise UnknownName(f"unknown core sequence {name!r}") from None
    with _CORE_LOCK:
        seq = _CORE.get(key)
        if seq is None:
            seq = _BUILDERS[key]()
            seq.label = key.value
            _CORE[key] = seq
            logger.debug("core sequence %s built", key.value)
    return seq


def xcth(r: Any) -> Seq:
    """r*x*coth(r*x), over rational or Gaussian r."""
    r = as_coeff(r)
    rx = scalar_mul(r, X)
    return scalar_mul(r, (X * compose(core(CoreName.COSHX), rx)) / compose(core(CoreName.SINHX), rx))


def log_seq(g: Seq) -> Seq:
    """lgnx o (g - 1); g must start with 1."""
    head = g.nth(0)
    if not is_one(head):
        raise NotLogDomain(f"log needs a head of 1, got {head!r}")
    return compose(core(CoreName.LGNX), g - 1)


def pow_f(f: Seq, r: Any) -> Seq:
    """General power expx o (r * log f)."""
    return compose(core(CoreName.EXPX), scalar_mul(r, log_seq(f)))
