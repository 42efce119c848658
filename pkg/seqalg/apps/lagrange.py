"""
Lagrange inversion and the general binomial coefficient.

If s = x*(r o s) with r_0 != 0, then [x^n] s^k = (k/n) [x^(n-k)] r^n.
"""

import logging
import math
from fractions import Fraction
from typing import Any

from seqalg.coeff import as_coeff
from seqalg.discrete import fall
from seqalg.errors import NotConversible
from seqalg.seq_core import X, Seq, compose, fix, is_zero

logger = logging.getLogger(__name__)


def lagrange_term(r: Seq, n: int, k: int = 1) -> Any:
    """[x^n] s^k for the solution s of s = x*(r o s)."""
    if n < 1 or not 1 <= k <= n:
        raise ValueError(f"need n >= 1 and 1 <= k <= n, got n={n} k={k}")
    if is_zero(r.nth(0)):
        raise NotConversible("lagrange inversion needs r_0 != 0")
    return Fraction(k, n) * (r ** n).nth(n - k)


def lagrange_fixpoint(r: Seq) -> Seq:
    """The series s = x*(r o s) itself, as a fixpoint."""
    return fix(lambda s: X * compose(r, s), label="lagrange")


def binom_general(r: Any, b: Any, k: int) -> Any:
    """[x^k](1 + b x)^r = b^k C(r, k) for any coefficient r."""
    return as_coeff(b) ** k * fall(r, k) / math.factorial(k)
