"""
Unit tests for the calculus operators and the core sequences (seqalg/calculus.py).
"""
from fractions import Fraction

import pytest
from hypothesis import given

from seqalg.bivariate import named_univariate
from seqalg.calculus import CoreName, core, deriv, e2o, facs, integ, log_seq, nats, o2e, pos, pow_f, xcth
from seqalg.errors import NotLogDomain, UnknownName
from seqalg.seq_core import X, Seq, compose, prefix_eq, sqroot, take, take_whole
from tests.strategies import polys

F = Fraction


class TestOperators:
    def test_deriv_of_polynomial(self):
        assert deriv(Seq.from_coeffs([1, 2, 3])).coefficients() == [2, 6]

    def test_integ_of_polynomial(self):
        assert integ(Seq.from_coeffs([1, 2])).coefficients() == [0, 1, 1]

    def test_integ_of_infinite(self):
        assert take(integ(1 / (1 - X)), 4) == [0, 1, F(1, 2), F(1, 3)]

    def test_enumerations(self):
        assert take(facs, 5) == [1, 1, 2, 6, 24]
        assert take(nats, 3) == [0, 1, 2]
        assert take(pos, 3) == [1, 2, 3]

    def test_e2o_o2e(self):
        assert take(e2o(1 / (1 - X)), 5) == [1, 1, 2, 6, 24]
        assert take(o2e(facs), 4) == [1, 1, 1, 1]

    @given(polys())
    def test_fundamental_theorems(self, f):
        assert prefix_eq(deriv(integ(f)), f, 8)
        assert prefix_eq(integ(deriv(f)) + f.nth(0), f, 8)

    @given(polys())
    def test_factorial_transforms_invert(self, f):
        assert prefix_eq(o2e(e2o(f)), f, 8)

    @given(polys(), polys())
    def test_chain_rule(self, f, p):
        g = X * p
        assert prefix_eq(deriv(compose(f, g)), compose(deriv(f), g) * deriv(g), 12)

    @pytest.mark.parametrize("outer", [CoreName.EXPX, CoreName.COSX, CoreName.ATANX])
    def test_chain_rule_infinite_outer(self, outer):
        f, g = core(outer), core(CoreName.SINX)
        assert prefix_eq(deriv(compose(f, g)), compose(deriv(f), g) * deriv(g), 12)


class TestCoreSequences:
    """Each core sequence against its known Maclaurin coefficients."""

    @pytest.mark.parametrize(
        "name, expected",
        [
            (CoreName.STARX, [1, 1, 1, 1, 1, 1]),
            (CoreName.LGNX, [0, 1, F(-1, 2), F(1, 3), F(-1, 4), F(1, 5)]),
            (CoreName.SINX, [0, 1, 0, F(-1, 6), 0, F(1, 120)]),
            (CoreName.COSX, [1, 0, F(-1, 2), 0, F(1, 24), 0]),
            (CoreName.SINHX, [0, 1, 0, F(1, 6), 0, F(1, 120)]),
            (CoreName.COSHX, [1, 0, F(1, 2), 0, F(1, 24), 0]),
            (CoreName.TANHX, [0, 1, 0, F(-1, 3), 0, F(2, 15)]),
            (CoreName.GDX, [0, 1, 0, F(-1, 6), 0, F(1, 24)]),
            (CoreName.ATANX, [0, 1, 0, F(-1, 3), 0, F(1, 5)]),
            (CoreName.ASINX, [0, 1, 0, F(1, 6), 0, F(3, 40)]),
            (CoreName.XCOTX, [1, 0, F(-1, 3), 0, F(-1, 45), 0]),
            (CoreName.XCOTHX, [1, 0, F(1, 3), 0, F(-1, 45), 0]),
        ],
    )
    def test_prefix(self, name, expected):
        assert take(core(name), 6) == expected

    def test_expx_is_all_ones_after_e2o(self):
        assert take_whole(e2o(core("expx")), 8) == [1] * 8

    def test_tangent_and_secant_numbers(self):
        assert take_whole(e2o(core(CoreName.TANX)), 8) == [0, 1, 0, 2, 0, 16, 0, 272]
        assert take_whole(e2o(core(CoreName.SECX)), 8) == [1, 0, 1, 0, 5, 0, 61, 0]

    def test_shared(self):
        assert core("expx") is core(CoreName.EXPX)

    def test_unknown(self):
        with pytest.raises(UnknownName):
            core("cotx")

    def test_pythagoras(self):
        one = core(CoreName.SINX) ** 2 + core(CoreName.COSX) ** 2
        assert take(one, 10) == [1] + [0] * 9

    def test_exp_undoes_log(self):
        assert prefix_eq(compose(core(CoreName.EXPX), core(CoreName.LGNX)), 1 + X, 12)

    def test_perm_is_set_of_cycles(self):
        diff = named_univariate("perm") - compose(core(CoreName.EXPX), log_seq(core(CoreName.STARX)))
        assert take_whole(diff, 6) == [0] * 6


class TestLogAndPower:
    def test_log_of_one_plus_x(self):
        assert prefix_eq(log_seq(1 + X), core(CoreName.LGNX), 8)

    def test_log_domain(self):
        with pytest.raises(NotLogDomain):
            log_seq(2 + X)

    def test_half_power_is_sqroot(self):
        assert prefix_eq(pow_f(1 + X, F(1, 2)), sqroot(1 + X), 8)

    def test_integer_power(self):
        assert take(pow_f(1 + X, 3), 6) == [1, 3, 3, 1, 0, 0]

    def test_xcth_one_is_xcothx(self):
        assert prefix_eq(xcth(1), core(CoreName.XCOTHX), 10)

    def test_xcth_is_even(self):
        assert all(c == 0 for c in take(xcth(F(1, 3)), 10)[1::2])
