"""
Unit tests for the exact coefficient fields (seqalg/coeff.py).
"""
from fractions import Fraction

import pytest
from hypothesis import assume, given

from seqalg.coeff import (
    I,
    Gaussian,
    as_coeff,
    divide,
    gauss_arith,
    make_all_real,
    make_real,
    make_whole,
    rat_arith,
)
from seqalg.errors import DivideByZero, NotReal, NotWhole
from tests.strategies import fractions, gaussians, nonzero_fractions


class TestGaussian:
    """Gaussian rationals: ring product, conjugate division, embedding of Q."""

    def test_product(self):
        assert Gaussian(1, 2) * Gaussian(3, -1) == Gaussian(5, 5)

    def test_division_by_conjugate_norm(self):
        assert Gaussian(5, 5) / Gaussian(3, -1) == Gaussian(1, 2)

    def test_i_squared_is_minus_one(self):
        assert I * I == -1

    def test_rationals_embed(self):
        assert Gaussian(Fraction(1, 2)) == Fraction(1, 2)
        assert hash(Gaussian(2, 0)) == hash(Fraction(2))

    def test_mixed_operands(self):
        assert 1 + I == Gaussian(1, 1)
        assert 2 - I == Gaussian(2, -1)
        assert 1 / I == -I

    def test_division_by_zero(self):
        with pytest.raises(DivideByZero):
            Gaussian(1, 1) / Gaussian(0, 0)

    def test_power(self):
        assert (1 + I) ** 4 == -4
        assert (1 + I) ** -1 == Gaussian(Fraction(1, 2), Fraction(-1, 2))

    def test_conjugate_and_norm(self):
        z = Gaussian(3, 4)
        assert z.conjugate() == Gaussian(3, -4)
        assert z.norm() == 25
        assert z * z.conjugate() == 25

    @given(gaussians, gaussians, gaussians)
    def test_distributive(self, a, b, c):
        assert a * (b + c) == a * b + a * c

    @given(gaussians, gaussians)
    def test_division_inverts_product(self, a, b):
        assume(b.norm() != 0)
        assert (a / b) * b == a

    @given(fractions, fractions)
    def test_embedding_is_a_homomorphism(self, a, b):
        assert Gaussian(a) * Gaussian(b) == Gaussian(a * b)


class TestFieldOperations:
    def test_as_coeff_normalizes_ints(self):
        value = as_coeff(3)
        assert isinstance(value, Fraction) and value == 3

    @pytest.mark.parametrize("bad", [True, 1.5])
    def test_as_coeff_rejects_bools_and_floats(self, bad):
        with pytest.raises(TypeError):
            as_coeff(bad)

    def test_divide_is_exact(self):
        assert divide(1, 3) == Fraction(1, 3)

    def test_divide_by_zero_is_also_a_zero_division_error(self):
        with pytest.raises(ZeroDivisionError):
            divide(1, 0)
        with pytest.raises(DivideByZero):
            divide(Fraction(2, 3), 0)

    @pytest.mark.parametrize(
        "op, expected",
        [("add", Fraction(4, 3)), ("sub", Fraction(2, 3)), ("mul", Fraction(1, 3)), ("div", Fraction(3))],
    )
    def test_rat_arith(self, op, expected):
        assert rat_arith(1, Fraction(1, 3), op) == expected

    def test_rat_arith_unknown_op(self):
        with pytest.raises(ValueError):
            rat_arith(1, 2, "pow")

    def test_gauss_arith(self):
        assert gauss_arith(I, I, "mul") == -1
        assert gauss_arith(1, I, "div") == -I
        with pytest.raises(DivideByZero):
            gauss_arith(I, 0, "div")

    @given(fractions, nonzero_fractions)
    def test_rational_field_law(self, a, b):
        assert rat_arith(rat_arith(a, b, "div"), b, "mul") == a


class TestProjections:
    def test_make_whole(self):
        assert make_whole(Fraction(4, 2)) == 2
        assert make_whole(Gaussian(3, 0)) == 3
        assert make_whole(7) == 7

    @pytest.mark.parametrize("bad", [Fraction(1, 2), Gaussian(3, 1)])
    def test_make_whole_rejects(self, bad):
        with pytest.raises(NotWhole):
            make_whole(bad)

    def test_make_real(self):
        assert make_real(Gaussian(Fraction(1, 3), 0)) == Fraction(1, 3)
        with pytest.raises(NotReal):
            make_real(Gaussian(1, 2))

    def test_make_all_real(self):
        assert make_all_real([Gaussian(1, 0), 2, Fraction(1, 2)]) == [1, 2, Fraction(1, 2)]
