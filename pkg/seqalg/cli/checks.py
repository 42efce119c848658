"""
Named check suites for `seqalg check`.

  golden-paper   printed reference values, compared exactly
  identities     algebraic identities on seeded random inputs
  float-demos    the two floating-point demonstrations
"""

from __future__ import annotations

import logging
import math
import random
from fractions import Fraction
from typing import Callable, NamedTuple

from pydantic import BaseModel

from seqalg import apps
from seqalg.bivariate import (
    U,
    Z,
    diagonals,
    named_bivariate,
    named_univariate,
    registry_entries,
    select,
    take_biv_w,
    take_ebiv,
    take_ebiv_w,
    taylor,
)
from seqalg.calculus import CoreName, core, deriv, e2o, integ, log_seq, o2e, xcth
from seqalg.cli.evaluator import EvalMode, evaluate
from seqalg.cli.syntax import parse, parse_definition
from seqalg.discrete import (
    euler_expand_check,
    factorials_scanl,
    h2i,
    hadamard,
    i2h,
    infiltration,
    shuffle,
    shuffle_ht,
    shuffle_inv,
)
from seqalg.errors import SeqAlgError, UnknownSuite
from seqalg.linear import Lode, Matrix, cayley_hamilton_check, klarner_solve, kleene_star, matrix_exp
from seqalg.seq_core import X, Seq, compose, converse, fix, prefix_eq, sqroot, take_whole

logger = logging.getLogger(__name__)

SEED = 20240601
PREFIX = 10


class Check(NamedTuple):
    name: str
    run: Callable[[], bool]


class SuiteReport(BaseModel):
    suite: str
    passed: list[str]
    failed: list[str]

    @property
    def ok(self) -> bool:
        return not self.failed

    def summary(self) -> str:
        return f"{self.suite}: {len(self.passed)} passed, {len(self.failed)} failed"


# ---------------------------------------------------------------------------
# golden-paper
# ---------------------------------------------------------------------------

def _fac_ode() -> Seq:
    return fix(lambda f: 1 + X * f + X ** 2 * deriv(f), label="fac")


_PASCAL_ROWS = [[1], [1, 1], [1, 2, 1], [1, 3, 3, 1], [1, 4, 6, 4, 1], [1, 5, 10, 10, 5, 1]]

_MOESSNER_TRIANGLES = [
    [[1], [1, 1], [1, 2, 1], [1, 3, 3, 1], [1, 4, 6, 4, 1]],
    [[1], [1, 5], [1, 6, 11], [1, 7, 17, 15], [1, 8, 24, 32, 16]],
    [[1], [1, 9], [1, 10, 33], [1, 11, 43, 65], [1, 12, 54, 108, 81]],
]


def golden_checks() -> list[Check]:
    facs = [1, 1, 2, 6, 24, 120]
    return [
        Check("catalan", lambda: take_whole(named_univariate("catalan"), 8) == [1, 1, 2, 5, 14, 42, 132, 429]),
        Check(
            "schroeder closed form",
            lambda: take_whole(evaluate(parse("(1+x-sqroot(1-6*x+x^2))/4")), 11)
            == [0, 1, 1, 3, 11, 45, 197, 903, 4279, 20793, 103049],
        ),
        Check(
            "schroeder triangle",
            lambda: take_biv_w(range(1, 7), named_bivariate("schroeder"))
            == [[0], [1, 0], [0, 1, 0], [0, 1, 2, 0], [0, 1, 5, 5, 0], [0, 1, 9, 21, 14, 0]],
        ),
        Check("pascal diagonals", lambda: diagonals(named_bivariate("pascal"), 6) == _PASCAL_ROWS),
        Check("ebinom rows", lambda: take_ebiv_w(range(1, 7), named_bivariate("ebinom")) == _PASCAL_ROWS),
        Check(
            "fibonacci via klarner",
            lambda: take_whole(klarner_solve(Lode(b=[-1, -1, 1], inits=[1, 1])), 10)
            == [1, 1, 2, 3, 5, 8, 13, 21, 34, 55],
        ),
        Check("factorials by scanl", lambda: factorials_scanl(6) == facs),
        Check("factorials by ode", lambda: take_whole(_fac_ode(), 6) == facs),
        Check("factorials by continued fraction", lambda: take_whole(apps.cf_factorials(4), 6) == facs),
        Check("factorials by shuffle inverse", lambda: take_whole(shuffle_inv(1 - X), 6) == facs),
        Check("tangent numbers", lambda: apps.tangent_numbers(10) == [0, 1, 0, 2, 0, 16, 0, 272, 0, 7936]),
        Check("secant numbers", lambda: apps.secant_numbers(10) == [1, 0, 1, 0, 5, 0, 61, 0, 1385, 0]),
        Check(
            "bernoulli numbers",
            lambda: apps.bernoulli_numbers(8)
            == [1, Fraction(-1, 2), Fraction(1, 6), 0, Fraction(-1, 30), 0, Fraction(1, 42), 0],
        ),
        Check(
            "connected acyclic graphs",
            lambda: take_whole(e2o(named_univariate("connectedAcyclicGraph")), 8)
            == [0, 1, 1, 3, 16, 125, 1296, 16807],
        ),
        Check(
            "entringer",
            lambda: apps.entringer(7)
            == [[1], [1, 0], [0, 1, 1], [2, 2, 1, 0], [0, 2, 4, 5, 5], [16, 16, 14, 10, 5, 0], [0, 16, 32, 46, 56, 61, 61]],
        ),
        Check("entringer vs zigzags", lambda: apps.zigzags_check(7)),
        Check(
            "logan polynomials",
            lambda: apps.logan_iterate(4)
            == apps.logan_closed_form(4)
            == [[0, 1], [1, 0, 1], [0, 2, 0, 2], [2, 0, 8, 0, 6]],
        ),
        Check(
            "valleys",
            lambda: take_ebiv_w(range(1, 7), named_bivariate("valleys"))
            == [[1], [1, 0], [2, 0, 0], [4, 2, 0, 0], [8, 16, 0, 0, 0], [16, 88, 16, 0, 0, 0]],
        ),
        Check("moessner", lambda: apps.moessner(4, 5) == [1, 16, 81, 256, 625]),
        Check("moessner triangles", lambda: apps.moessner_triangles(4, [5, 5, 5]) == _MOESSNER_TRIANGLES),
        Check(
            "power sums",
            lambda: take_ebiv(range(2, 5), named_bivariate("powerSums"))
            == [[0, 1], [0, Fraction(-1, 2), Fraction(1, 2)], [0, Fraction(1, 6), Fraction(-1, 2), Fraction(1, 3)]],
        ),
    ]


# ---------------------------------------------------------------------------
# identities
# ---------------------------------------------------------------------------

def _poly(rng: random.Random, unit_head: bool = False) -> Seq:
    coeffs = [rng.randint(-5, 5) for _ in range(rng.randint(2, 5))]
    if unit_head:
        coeffs[0] = 1
    return Seq.from_coeffs(coeffs)


def _matrix(rng: random.Random, n: int) -> Matrix:
    return Matrix([[Fraction(rng.randint(-4, 4), rng.randint(1, 3)) for _ in range(n)] for _ in range(n)])


def _random_identity(rng: random.Random, name: str, law: Callable[[random.Random], bool], cases: int) -> Check:
    return Check(f"{name} x{cases}", lambda: all(law(rng) for _ in range(cases)))


def _ring_law(rng: random.Random) -> bool:
    f, g, h = _poly(rng), _poly(rng), _poly(rng)
    return (
        prefix_eq(f * (g + h), f * g + f * h, PREFIX)
        and prefix_eq((f * g) * h, f * (g * h), PREFIX)
        and prefix_eq(f - f, Seq.from_coeffs([]), PREFIX)
    )


def _division_law(rng: random.Random) -> bool:
    f, g = _poly(rng), _poly(rng, unit_head=True)
    return prefix_eq((f / g) * g, f, PREFIX)


def _sqroot_law(rng: random.Random) -> bool:
    f = _poly(rng, unit_head=True)
    return prefix_eq(sqroot(f) ** 2, f, PREFIX)


def _converse_law(rng: random.Random) -> bool:
    f = X * _poly(rng, unit_head=True)
    return prefix_eq(compose(f, converse(f)), X, PREFIX)


def _calculus_law(rng: random.Random) -> bool:
    f = _poly(rng)
    return prefix_eq(deriv(integ(f)), f, PREFIX) and prefix_eq(
        integ(deriv(f)) + f.nth(0), f, PREFIX
    )


def _shuffle_law(rng: random.Random) -> bool:
    f, g = _poly(rng), _poly(rng)
    bridge = e2o(o2e(f) * o2e(g))
    return prefix_eq(shuffle(f, g), bridge, PREFIX) and prefix_eq(shuffle_ht(f, g), bridge, PREFIX)


def _newton_law(rng: random.Random) -> bool:
    f, g = _poly(rng), _poly(rng)
    return prefix_eq(i2h(h2i(f)), f, PREFIX) and prefix_eq(
        h2i(hadamard(i2h(f), i2h(g))), infiltration(f, g), PREFIX
    )


def _log_exp_law(rng: random.Random) -> bool:
    f = _poly(rng, unit_head=True)
    return prefix_eq(compose(core(CoreName.EXPX), log_seq(f)), f, PREFIX)


def _lagrange_law(rng: random.Random) -> bool:
    r = _poly(rng, unit_head=True)
    s = apps.lagrange_fixpoint(r)
    return all(apps.lagrange_term(r, n, 1) == s.nth(n) for n in range(1, 9))


def _cayley_hamilton_law(rng: random.Random) -> bool:
    return cayley_hamilton_check(_matrix(rng, rng.choice([2, 3])), PREFIX)


def _matrix_exp_law(rng: random.Random) -> bool:
    a = _matrix(rng, 2)
    exp_a, star = matrix_exp(a), kleene_star(a)
    return all(prefix_eq(exp_a[i, j], o2e(star[i, j]), 8) for i in range(2) for j in range(2))


def _definitions_consistent() -> bool:
    for entry in registry_entries():
        name, expr = parse_definition(entry.definition)
        if entry.arity == "bivariate":
            expected, mode, count = named_bivariate(name), EvalMode(arity="bivariate"), 5
            if diagonals(evaluate(expr, mode), count) != diagonals(expected, count):
                logger.warning("definition of %s disagrees with the registry", name)
                return False
        else:
            expected = named_univariate(name)
            if not prefix_eq(evaluate(expr), expected, 8):
                logger.warning("definition of %s disagrees with the registry", name)
                return False
    return True


def identity_checks() -> list[Check]:
    rng = random.Random(SEED)
    half = Fraction(1, 2)
    return [
        _random_identity(rng, "ring laws", _ring_law, 40),
        _random_identity(rng, "division inverts product", _division_law, 30),
        _random_identity(rng, "sqroot squares back", _sqroot_law, 20),
        _random_identity(rng, "converse composes to x", _converse_law, 15),
        _random_identity(rng, "fundamental theorems of calculus", _calculus_law, 30),
        _random_identity(rng, "shuffle bridge and head-tail rule", _shuffle_law, 20),
        _random_identity(rng, "newton transform and infiltration", _newton_law, 20),
        _random_identity(rng, "exp o log", _log_exp_law, 15),
        _random_identity(rng, "lagrange inversion", _lagrange_law, 20),
        _random_identity(rng, "cayley-hamilton", _cayley_hamilton_law, 20),
        _random_identity(rng, "matrix exponential", _matrix_exp_law, 10),
        Check("euler identity", lambda: apps.euler_identity_check(PREFIX)),
        Check("de moivre n<=4", lambda: all(apps.de_moivre_check(n, PREFIX) for n in range(1, 5))),
        Check("xcotx = real xcth(i)", lambda: apps.xcot_bridge_check(PREFIX)),
        Check(
            "xcothx = xcth(1/2) o 2x",
            lambda: prefix_eq(core(CoreName.XCOTHX), compose(xcth(half), 2 * X), PREFIX),
        ),
        Check("xcth(1/2) is even", lambda: prefix_eq(compose(xcth(half), -X), xcth(half), PREFIX)),
        Check("bernoulli recurrence", lambda: apps.bernoulli_recurrence_check(12)),
        Check("C = B + x/2 is even", lambda: apps.c_evenness_check(12)),
        Check("tan from bernoulli", lambda: apps.tan_bernoulli_check(PREFIX)),
        Check("schroeder totals", lambda: apps.schroeder_totals_check(10)),
        Check("euler expansion", lambda: euler_expand_check(Seq.from_coeffs([0, 1, 4, 9, 16, 25, 36, 49, 64, 81]), 9, PREFIX)),
        Check(
            "taylor of sinx",
            lambda: select(range(1, 9), taylor(core(CoreName.SINX)))
            == select(range(1, 9), compose(core(CoreName.SINX), U + Z)),
        ),
        Check("registry definitions", _definitions_consistent),
    ]


# ---------------------------------------------------------------------------
# float-demos
# ---------------------------------------------------------------------------

def float_checks() -> list[Check]:
    return [
        Check("euler-maclaurin zeta(2)", lambda: abs(apps.euler_maclaurin_zeta2() - 1.64493407) < 1e-6),
        Check("zeta(2) closed form", lambda: abs(apps.zeta_even(1) - math.pi ** 2 / 6) < 1e-12),
        Check("zeta(4) closed form", lambda: abs(apps.zeta_even(2) - math.pi ** 4 / 90) < 1e-10),
    ]


SUITES: dict[str, Callable[[], list[Check]]] = {
    "golden-paper": golden_checks,
    "identities": identity_checks,
    "float-demos": float_checks,
}


def run_suite(name: str) -> SuiteReport:
    if name not in SUITES:
        raise UnknownSuite(f"unknown suite {name!r}; choose from {', '.join(SUITES)}")
    passed, failed = [], []
    for check in SUITES[name]():
        try:
            ok = check.run()
        except (SeqAlgError, RecursionError) as exc:
            logger.warning("check %r raised %s", check.name, exc)
            ok = False
        (passed if ok else failed).append(check.name)
        if not ok:
            logger.warning("check failed: %s", check.name)
    report = SuiteReport(suite=name, passed=passed, failed=failed)
    logger.info(report.summary())
    return report
