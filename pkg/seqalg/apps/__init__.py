from seqalg.apps.bernoulli import (
    bernoulli,
    bernoulli_numbers,
    bernoulli_recurrence_check,
    c_evenness_check,
    euler_maclaurin_zeta2,
    power_sum_polys,
    tan_bernoulli_check,
    zeta_even,
)
from seqalg.apps.boustrophedon import (
    entringer,
    logan_closed_form,
    logan_iterate,
    secant_numbers,
    tangent_numbers,
    zigzags_check,
    zigzags_rows,
)
from seqalg.apps.contfrac import cf_cycles, cf_factorials, cf_tangent
from seqalg.apps.identities import (
    de_moivre_check,
    euler_identity_check,
    schroeder_totals_check,
    xcot_bridge_check,
)
from seqalg.apps.lagrange import binom_general, lagrange_fixpoint, lagrange_term
from seqalg.apps.sieve import (
    SieveSpec,
    ksmlp,
    long,
    moessner,
    moessner_rows,
    moessner_triangles,
    paasche_fac,
    super_fac,
)

__all__ = [
    "SieveSpec",
    "bernoulli",
    "bernoulli_numbers",
    "bernoulli_recurrence_check",
    "binom_general",
    "c_evenness_check",
    "cf_cycles",
    "cf_factorials",
    "cf_tangent",
    "de_moivre_check",
    "entringer",
    "euler_identity_check",
    "euler_maclaurin_zeta2",
    "ksmlp",
    "lagrange_fixpoint",
    "lagrange_term",
    "logan_closed_form",
    "logan_iterate",
    "long",
    "moessner",
    "moessner_rows",
    "moessner_triangles",
    "paasche_fac",
    "power_sum_polys",
    "schroeder_totals_check",
    "secant_numbers",
    "super_fac",
    "tan_bernoulli_check",
    "tangent_numbers",
    "xcot_bridge_check",
    "zeta_even",
    "zigzags_check",
    "zigzags_rows",
]
