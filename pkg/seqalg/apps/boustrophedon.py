"""
Zigzag (alternating) permutations: the Entringer triangle built by
back-and-forth partial sums, the same triangle read off the `zigzags`
bivariate, Logan polynomials and the tangent/secant numbers.
"""

import logging
from typing import Any, Callable

from seqalg.bivariate import diag_e2o, named_bivariate, select_w, take_ebiv_w, ue2o_diagonals
from seqalg.calculus import CoreName, core, deriv, e2o
from seqalg.discrete import Shuffle, prefix_sums, suffix_sums
from seqalg.seq_core import X, Seq, cons, fix, make_all_whole, take_whole

logger = logging.getLogger(__name__)

Row = list[Any]


def _alternate(f: Callable[[Seq], Seq], g: Callable[[Seq], Seq], seed: Seq, count: int) -> list[Seq]:
    rows = []
    current = seed
    for _ in range(count):
        rows.append(current)
        current = f(current)
        f, g = g, f
    return rows


def entringer(rows: int) -> list[list[int]]:
    """Rows 0..rows-1, alternating suffix sums and prefix sums from [1]."""
    seed = Seq.from_coeffs([1])
    return [make_all_whole(r) for r in _alternate(suffix_sums, prefix_sums, seed, rows)]


def zigzags_rows(rows: int) -> list[list[int]]:
    """E(n,k) = (n-k)! k! [u^(n-k) z^k] zigzags, diagonal by diagonal."""
    scaled = diag_e2o(ue2o_diagonals(named_bivariate("zigzags")))
    return select_w(range(1, rows + 1), scaled)


def zigzags_check(rows: int) -> bool:
    ok = entringer(rows) == zigzags_rows(rows)
    logger.debug("entringer vs zigzags, %d rows: %s", rows, ok)
    return ok


def logan_iterate(rows: int) -> list[list[int]]:
    """p_0 = x, p_(n+1) = (1 + x^2) * deriv p_n."""
    out = []
    p = X
    for _ in range(rows):
        out.append(make_all_whole(p))
        p = (1 + X ** 2) * deriv(p)
    return out


def logan_closed_form(rows: int) -> list[list[int]]:
    """Rows of the e2o'd `logan` bivariate; row n has n+2 entries."""
    return take_ebiv_w(range(2, rows + 2), named_bivariate("logan"))


def tangent_numbers(count: int) -> list[int]:
    return take_whole(e2o(core(CoreName.TANX)), count)


def secant_numbers(count: int) -> list[int]:
    """s = 1 : (s shuffled with the tangent numbers)."""
    tan_nums = e2o(core(CoreName.TANX))
    sec_nums = fix(lambda s: cons(1, (Shuffle(s) * Shuffle(tan_nums)).seq), label="secNums")
    return take_whole(sec_nums, count)
