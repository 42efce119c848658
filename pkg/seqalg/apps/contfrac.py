"""
Continued fractions cut at a finite depth.

Level `depth` is the innermost one; whatever would sit below it is replaced
by 1. Each level contributes a factor x^2 (z^2), so the prefix stays exact
for roughly 2*depth terms.
"""

import logging
from typing import Optional

from seqalg.bivariate import U, Z
from seqalg.seq_core import X, Seq, const

logger = logging.getLogger(__name__)

DEFAULT_DEPTH = 12


def _depth(depth: Optional[int]) -> int:
    depth = DEFAULT_DEPTH if depth is None else depth
    if depth < 1:
        raise ValueError("continued fraction depth must be at least 1")
    return depth


def cf_factorials(depth: Optional[int] = None) -> Seq:
    """1/(1 - x - 1 x^2/(1 - 3x - 4x^2/(1 - 5x - ...))): the factorials."""
    depth = _depth(depth)
    below: Seq = const(1)
    for n in range(depth, 0, -1):
        below = 1 - (2 * n - 1) * X - n * n * X ** 2 / below
    logger.debug("cf_factorials: depth %d", depth)
    return 1 / below


def cf_tangent(depth: Optional[int] = None) -> Seq:
    """x*u_1 with u_k = 1/(1 - k(k+1) x^2 u_(k+1)): the tangent numbers."""
    depth = _depth(depth)
    u: Seq = const(1)
    for k in range(depth, 0, -1):
        u = 1 / (1 - k * (k + 1) * X ** 2 * u)
    return X * u


def cf_cycles(depth: Optional[int] = None) -> Seq:
    """
    The cycles triangle with the z-side factorials removed, as a bivariate
    continued fraction; level n has denominator
    1 - (u + 2(n-1)) z - n (u + n - 1) z^2 / (level n+1).
    """
    depth = _depth(depth)
    below: Seq = const(1)
    for n in range(depth, 0, -1):
        below = 1 - (U + 2 * (n - 1)) * Z - n * (U + (n - 1)) * Z ** 2 / below
    return 1 / below
