"""Identity demonstrations over Gaussian rationals and the Schroeder tables."""

import logging

from seqalg.bivariate import named_bivariate, named_univariate, take_biv
from seqalg.calculus import CoreName, core, xcth
from seqalg.coeff import I, make_all_real
from seqalg.seq_core import X, compose, prefix_eq, take

logger = logging.getLogger(__name__)


def euler_identity_check(n_terms: int) -> bool:
    """cosx + i sinx = expx o (i x)."""
    lhs = core(CoreName.COSX) + I * core(CoreName.SINX)
    rhs = compose(core(CoreName.EXPX), I * X)
    return prefix_eq(lhs, rhs, n_terms)


def de_moivre_check(n: int, n_terms: int = 10) -> bool:
    """(cosx + i sinx)^n = cosx o nx + i (sinx o nx)."""
    cis = core(CoreName.COSX) + I * core(CoreName.SINX)
    nx = n * X
    rhs = compose(core(CoreName.COSX), nx) + I * compose(core(CoreName.SINX), nx)
    ok = prefix_eq(cis ** n, rhs, n_terms)
    logger.debug("de moivre n=%d: %s", n, ok)
    return ok


def xcot_bridge_check(n_terms: int) -> bool:
    """xcotx equals the real projection of xcth(i)."""
    return take(core(CoreName.XCOTX), n_terms) == make_all_real(take(xcth(I), n_terms))


def schroeder_totals_check(rows: int) -> bool:
    """Row n of the schroeder triangle sums to the n-th hipparchusSchroeder number."""
    table = take_biv(range(1, rows + 1), named_bivariate("schroeder"))
    totals = take(named_univariate("hipparchusSchroeder"), rows)
    return [sum(row) for row in table] == totals
