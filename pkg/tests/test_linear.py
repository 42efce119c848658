"""
Unit tests for recurrences and matrices (seqalg/linear.py).
"""
from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st
from pydantic import ValidationError

from seqalg.bivariate import named_bivariate, take_biv
from seqalg.calculus import CoreName, core, o2e
from seqalg.errors import DegenerateRecurrence, DimensionMismatch
from seqalg.linear import (
    Lode,
    Matrix,
    cayley_hamilton_check,
    char_poly,
    det,
    klarner_solve,
    kleene_star,
    lode_to_ode_bridge,
    mat_arith,
    mat_scalar,
    matrix_exp,
    satisfies_recurrence,
    star_matrices,
)
from seqalg.seq_core import X, as_poly, prefix_eq, take, take_whole
from tests.strategies import fractions


class TestMatrix:
    @pytest.mark.parametrize("rows", [[], [[1, 2]], [[1, 2], [3]]])
    def test_must_be_square(self, rows):
        with pytest.raises(DimensionMismatch):
            Matrix(rows)

    def test_dimension_limit(self):
        with pytest.raises(DimensionMismatch):
            Matrix.identity(9)

    def test_product(self, small_matrix):
        assert small_matrix * small_matrix == Matrix([[7, 10], [15, 22]])

    def test_sum_and_scalar(self, small_matrix):
        assert small_matrix + small_matrix == 2 * small_matrix
        assert mat_scalar(Fraction(1, 2), small_matrix)[1, 1] == 2
        assert small_matrix - small_matrix == Matrix.zero(2)
        assert -small_matrix == mat_scalar(-1, small_matrix)

    def test_power_and_transpose(self, small_matrix):
        assert small_matrix ** 0 == Matrix.identity(2)
        assert small_matrix ** 2 == small_matrix * small_matrix
        assert small_matrix.transpose() == Matrix([[1, 3], [2, 4]])

    def test_mismatched_dims(self, small_matrix):
        with pytest.raises(DimensionMismatch):
            small_matrix + Matrix.identity(3)

    def test_mat_arith(self, small_matrix):
        assert mat_arith(small_matrix, Matrix.identity(2), "mul") == small_matrix
        with pytest.raises(ValueError):
            mat_arith(small_matrix, small_matrix, "div")


class TestDeterminant:
    def test_det(self, small_matrix):
        assert det(small_matrix) == -2

    def test_char_poly(self, small_matrix):
        assert char_poly(small_matrix).coefficients() == [-2, -5, 1]

    def test_char_poly_of_diagonal(self):
        a = Matrix([[1, 0, 0], [0, 2, 0], [0, 0, 3]])
        assert char_poly(a).coefficients() == [-6, 11, -6, 1]

    def test_char_poly_is_monic(self):
        a = Matrix([[Fraction(1, 2), 1, 0], [0, 0, 1], [3, 0, -1]])
        assert char_poly(a).coefficients()[-1] == 1

    @given(st.lists(st.lists(fractions, min_size=3, max_size=3), min_size=3, max_size=3))
    def test_char_poly_of_transpose(self, rows):
        a = Matrix(rows)
        assert char_poly(a.transpose()).coefficients() == char_poly(a).coefficients()


class TestRecurrences:
    def test_fibonacci(self, fib_lode):
        assert take_whole(klarner_solve(fib_lode), 10) == [1, 1, 2, 3, 5, 8, 13, 21, 34, 55]
        assert satisfies_recurrence(klarner_solve(fib_lode), fib_lode.b, 20)

    def test_recurrence_check_rejects_wrong_coefficients(self):
        powers = 1 / (1 - 2 * X)
        assert satisfies_recurrence(powers, [-2, 1], 12)
        assert not satisfies_recurrence(powers, [-3, 1], 12)

    def test_order(self, fib_lode):
        assert fib_lode.order == 2

    @pytest.mark.parametrize(
        "b, inits",
        [([1], []), ([1, 1, 1], [1]), ([1, 1], [1, 2])],
    )
    def test_validation(self, b, inits):
        with pytest.raises(ValidationError):
            Lode(b=b, inits=inits)

    def test_degenerate(self):
        with pytest.raises(DegenerateRecurrence):
            klarner_solve(Lode(b=[1, 0], inits=[1]))

    def test_chebyshev_polynomials(self):
        # T(n+2) = 2u T(n+1) - T(n) with T0 = 1, T1 = u; coefficients are polynomials in u
        solution = klarner_solve(Lode(b=[1, [0, -2], 1], inits=[1, [0, 1]]))
        rows = [take(as_poly(solution.nth(n)), n + 1) for n in range(6)]
        assert rows == take_biv(range(1, 7), named_bivariate("chebyshev"))

    def test_ode_bridge_gives_cosine(self):
        # f'' + f = 0, f(0) = 1, f'(0) = 0
        cos = lode_to_ode_bridge(Lode(b=[1, 0, 1], inits=[1, 0]))
        assert prefix_eq(cos, core(CoreName.COSX), 10)

    @given(st.lists(fractions, min_size=2, max_size=2), fractions, fractions)
    def test_solution_satisfies_recurrence(self, inits, b0, b1):
        b = [b0, b1, 1]
        assert satisfies_recurrence(klarner_solve(Lode(b=b, inits=inits)), b, 10)


class TestStar:
    def test_entries_are_powers(self, small_matrix):
        star = kleene_star(small_matrix)
        assert star[0, 0].nth(2) == 7
        assert star_matrices(star, 3)[2] == small_matrix ** 2

    def test_against_cramer(self, small_matrix):
        # (I - Ax)^-1 by the adjugate: entry (0,0) is (1 - 4x)/det(I - Ax)
        star = kleene_star(small_matrix)
        expected = (1 - 4 * X) / (1 - 5 * X - 2 * X ** 2)
        assert prefix_eq(star[0, 0], expected, 8)

    def test_cayley_hamilton(self, small_matrix):
        assert cayley_hamilton_check(small_matrix, 10)

    def test_wrong_annihilator(self, small_matrix):
        assert not cayley_hamilton_check(small_matrix, 10, b=[1, 1])

    @given(st.lists(st.lists(fractions, min_size=3, max_size=3), min_size=3, max_size=3))
    def test_cayley_hamilton_random(self, rows):
        assert cayley_hamilton_check(Matrix(rows), 8)


class TestMatrixExp:
    def test_nilpotent(self):
        exp_n = matrix_exp(Matrix([[0, 1], [0, 0]]))
        assert take(exp_n[0, 0], 3) == [1, 0, 0]
        assert take(exp_n[0, 1], 3) == [0, 1, 0]
        assert take(exp_n[1, 0], 3) == [0, 0, 0]

    def test_matches_star(self, small_matrix):
        exp_a, star = matrix_exp(small_matrix), kleene_star(small_matrix)
        for i in range(2):
            for j in range(2):
                assert prefix_eq(exp_a[i, j], o2e(star[i, j]), 8)

    def test_scalar_matrix_is_exp(self):
        exp_i = matrix_exp(Matrix.identity(2))
        assert prefix_eq(exp_i[0, 0], core(CoreName.EXPX), 8)
