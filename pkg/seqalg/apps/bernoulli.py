"""
Bernoulli numbers and what they compute: power sums, tan, zeta at even
arguments and an Euler-Maclaurin tail estimate.

The two float-valued functions here (`euler_maclaurin_zeta2`, `zeta_even`)
are the only places in the package where a result leaves exact arithmetic,
and they convert at the very end.
"""

import logging
import math
from fractions import Fraction
from typing import Optional, Sequence

from seqalg.bivariate import named_bivariate, take_ebiv
from seqalg.calculus import CoreName, core, e2o
from seqalg.coeff import ZERO
from seqalg.seq_core import X, Seq, compose, prefix_eq, take

logger = logging.getLogger(__name__)

# Partial sum 1/1^2 + ... + 1/9^2; the tail from 10 on is estimated.
_HEAD_TERMS = 9


def bernoulli() -> Seq:
    """e2o(x/(expx - 1)): B_0, B_1, B_2, ... with B_1 = -1/2."""
    return e2o(X / (core(CoreName.EXPX) - 1))


def bernoulli_numbers(count: int) -> list[Fraction]:
    return take(bernoulli(), count)


def bernoulli_recurrence_check(n_max: int) -> bool:
    """sum_k C(n,k) B_k = B_n + [n = 1] for n <= n_max."""
    b = bernoulli_numbers(n_max + 1)
    for n in range(n_max + 1):
        lhs = sum((math.comb(n, k) * b[k] for k in range(n + 1)), ZERO)
        if lhs != b[n] + (1 if n == 1 else 0):
            logger.warning("bernoulli recurrence fails at n=%d", n)
            return False
    return True


def c_evenness_check(n_terms: int) -> bool:
    """C = B + x/2 (ordinary form) is even: C o (-x) = C."""
    c = X / (core(CoreName.EXPX) - 1) + X / 2
    return prefix_eq(compose(c, -X), c, n_terms)


def power_sum_polys(count: int) -> list[list[Fraction]]:
    """Row m is the polynomial in n for 0^m + 1^m + ... + (n-1)^m, m < count."""
    return take_ebiv(range(2, count + 2), named_bivariate("powerSums"))


def tan_bernoulli_check(n_terms: int, bernoulli_values: Optional[Sequence[Fraction]] = None) -> bool:
    """
    Compare tanx with sum_k (-1)^(k-1) 4^k (4^k - 1) B_2k/(2k)! x^(2k-1)
    through n_terms. `bernoulli_values` overrides the computed numbers.
    """
    b = list(bernoulli_values) if bernoulli_values is not None else bernoulli_numbers(n_terms + 1)
    tan = core(CoreName.TANX)
    for n in range(n_terms):
        if n % 2 == 0:
            expected = ZERO
        else:
            k = (n + 1) // 2
            expected = (-1) ** (k - 1) * 4 ** k * (4 ** k - 1) * b[2 * k] / math.factorial(2 * k)
        if tan.nth(n) != expected:
            return False
    return True


def zeta_even(k: int) -> float:
    """zeta(2k) = (-1)^(k-1) 2^(2k-1) B_2k/(2k)! pi^(2k)."""
    if k < 1:
        raise ValueError("zeta_even needs k >= 1")
    b = bernoulli().nth(2 * k)
    exact = (-1) ** (k - 1) * 2 ** (2 * k - 1) * b / math.factorial(2 * k)
    return float(exact) * math.pi ** (2 * k)


def euler_maclaurin_zeta2(order: int = 4) -> float:
    """
    sum 1/x^2 over x >= 1: the first nine terms exactly, the rest by
    Euler-Maclaurin on g = 1/(x+10)^2 using B_2..B_order. Every derivative
    of g vanishes at infinity, so only the terms at 0 remain.
    """
    head = sum((Fraction(1, x * x) for x in range(1, _HEAD_TERMS + 1)), ZERO)
    a = _HEAD_TERMS + 1
    g = 1 / (a + X) ** 2
    b = bernoulli_numbers(order + 1)
    tail = Fraction(1, a) + g.nth(0) / 2
    for k in range(2, order + 1):
        # D^(k-1) g (0) = (k-1)! [x^(k-1)] g
        derivative = math.factorial(k - 1) * g.nth(k - 1)
        tail -= b[k] / math.factorial(k) * derivative
    logger.debug("euler-maclaurin: head=%s tail=%s", head, tail)
    return float(head + tail)
