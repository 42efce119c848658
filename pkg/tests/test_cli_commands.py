"""
End-to-end tests for the command line (seqalg/cli/main.py, commands.py, render.py).
Everything goes through `main(argv)`; output is read back with capsys.
"""
import importlib
from fractions import Fraction

import pytest

# seqalg.cli re-exports the `main` function, shadowing the submodule attribute.
cli_main = importlib.import_module("seqalg.cli.main")
from seqalg.cli.checks import SUITES, run_suite
from seqalg.cli.commands import parse_spec
from seqalg.cli.main import EXIT_EVAL, EXIT_OK, EXIT_SYNTAX, main
from seqalg.cli.render import format_coeff, format_rational, format_row, in_field
from seqalg.coeff import Gaussian
from seqalg.config import Settings, load_settings
from seqalg.errors import ExprSyntaxError, UnknownSuite
from seqalg.observability import run_metadata
from seqalg.seq_core import X, Seq


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


class TestRender:
    @pytest.mark.parametrize(
        "value, text",
        [
            (Fraction(3), "3"),
            (Fraction(-1, 2), "-1/2"),
            (7, "7"),
            (Gaussian(1, 2), "1+2i"),
            (Gaussian(1, -2), "1-2i"),
            (Gaussian(0, Fraction(-1, 3)), "0-1/3i"),
            (Seq.from_coeffs([1, 2]), "[1,2]"),
            ([[1], [1, 1]], "[[1],[1,1]]"),
        ],
    )
    def test_format_coeff(self, value, text):
        assert format_coeff(value) == text

    def test_infinite_coefficient_needs_a_width(self):
        with pytest.raises(ValueError):
            format_coeff(1 / (1 - X))
        assert format_coeff(1 / (1 - X), 3) == "[1,1,1]"

    def test_format_rational(self):
        assert format_rational(Fraction(10, 4)) == "5/2"

    def test_row_has_no_spaces(self):
        assert format_row([Fraction(1), Fraction(-1, 2), Fraction(1, 6)]) == "[1,-1/2,1/6]"

    def test_in_field(self):
        assert format_row(in_field([Fraction(1), Gaussian(0, 1)], True)) == "[1+0i,0+1i]"
        assert in_field(Fraction(1), False) == 1


class TestSpec:
    def test_range(self):
        assert parse_spec("1..6") == [1, 2, 3, 4, 5, 6]

    def test_list(self):
        assert parse_spec("1,3, 5") == [1, 3, 5]

    def test_bad(self):
        with pytest.raises(ExprSyntaxError):
            parse_spec("a..b")


class TestTerms:
    def test_catalan(self, capsys):
        code, out, _ = run(capsys, "terms", "-n", "8", "catalan")
        assert code == EXIT_OK
        assert out == "[1,1,2,5,14,42,132,429]\n"

    def test_default_count(self, capsys):
        _, out, _ = run(capsys, "terms", "1/(1-2*x)")
        assert out == "[1,2,4,8,16,32,64,128,256,512]\n"

    def test_rationals(self, capsys):
        _, out, _ = run(capsys, "terms", "-n", "4", "lgnx")
        assert out == "[0,1,-1/2,1/3]\n"

    def test_whole(self, capsys):
        code, out, _ = run(capsys, "terms", "-n", "6", "--whole", "e2o(expx)")
        assert code == EXIT_OK
        assert out == "[1,1,1,1,1,1]\n"

    def test_whole_fails_on_fractions(self, capsys):
        code, _, err = run(capsys, "terms", "-n", "4", "--whole", "lgnx")
        assert code == EXIT_EVAL
        assert err.startswith("error: NotWhole:")

    def test_syntax_error(self, capsys):
        code, out, err = run(capsys, "terms", "1+*x")
        assert code == EXIT_SYNTAX
        assert out == ""
        assert err.startswith("syntax error:")
        assert "offset 2" in err

    def test_mode_error(self, capsys):
        code, _, err = run(capsys, "terms", "u")
        assert code == EXIT_EVAL
        assert "ModeError" in err

    def test_error_names_subexpression(self, capsys):
        code, _, err = run(capsys, "terms", "1 + sqroot(x)")
        assert code == EXIT_EVAL
        assert "NotASquareRootDomain" in err
        assert "(in: sqroot(x))" in err

    def test_wrong_argument_count(self, capsys):
        code, out, err = run(capsys, "terms", "shuffle(x)")
        assert code == EXIT_EVAL
        assert out == ""
        assert "ArityError" in err

    def test_bivariate_diagonals(self, capsys):
        _, out, _ = run(capsys, "terms", "--biv", "-n", "3", "u+z")
        assert out == "[[0],[1,1],[0,0,0]]\n"

    def test_gaussian(self, capsys):
        _, out, _ = run(capsys, "terms", "--field", "gaussian", "-n", "3", "expx o (i*x)")
        assert out == "[1+0i,0+1i,-1/2+0i]\n"


class TestTriangle:
    def test_plain_rows(self, capsys):
        code, out, _ = run(capsys, "triangle", "--spec", "1..4", "schroeder")
        assert code == EXIT_OK
        assert out == "[0]\n[1,0]\n[0,1,0]\n[0,1,2,0]\n"

    def test_e2o_whole(self, capsys):
        _, out, _ = run(capsys, "triangle", "--spec", "1..3", "--e2o", "--whole", "ebinom")
        assert out == "[1]\n[1,1]\n[1,2,1]\n"

    def test_stored_diagonals(self, capsys):
        _, out, _ = run(capsys, "triangle", "--spec", "1..3", "--diagonals", "pascal")
        assert out == "[1]\n[1,1]\n[1,2,1]\n"

    def test_biv_selects_stored_diagonals(self, capsys):
        code, out, _ = run(capsys, "triangle", "--spec", "1..3", "--biv", "pascal")
        assert code == EXIT_OK
        assert out == "[1]\n[1,1]\n[1,2,1]\n"

    def test_biv_with_e2o(self, capsys):
        _, out, _ = run(capsys, "triangle", "--spec", "1..3", "--biv", "--e2o", "--whole", "ebinom")
        assert out == "[1]\n[0,1]\n[0,1,1]\n"

    def test_comma_spec(self, capsys):
        _, out, _ = run(capsys, "triangle", "--spec", "3,3", "pascal")
        assert out == "[1,1,1]\n[1,2,3]\n"

    def test_bad_spec(self, capsys):
        code, _, _ = run(capsys, "triangle", "--spec", "a..b", "pascal")
        assert code == EXIT_SYNTAX


class TestNames:
    def test_grouped_listing(self, capsys):
        code, out, _ = run(capsys, "names")
        lines = out.splitlines()
        assert code == EXIT_OK
        assert lines[0] == "asinx = integ(1/sqroot(1-x^2))"
        assert "catalan = 1 + x*catalan^2" in lines
        assert lines.index("catalan = 1 + x*catalan^2") < lines.index("pascal = starx o (u + z)")


class TestCheck:
    def test_golden(self, capsys):
        code, out, _ = run(capsys, "check", "golden-paper")
        assert code == EXIT_OK
        assert "PASS catalan" in out
        assert out.splitlines()[-1].endswith(" 0 failed")

    def test_float_demos(self, capsys):
        code, out, _ = run(capsys, "check", "float-demos")
        assert code == EXIT_OK
        assert out.splitlines()[-1] == "float-demos: 3 passed, 0 failed"

    def test_identities(self):
        report = run_suite("identities")
        assert report.failed == []
        assert report.ok

    def test_unknown_suite(self, capsys):
        code, _, err = run(capsys, "check", "nosuch")
        assert code == EXIT_EVAL
        assert "UnknownSuite" in err
        with pytest.raises(UnknownSuite):
            run_suite("nosuch")

    def test_suite_names(self):
        assert set(SUITES) == {"golden-paper", "identities", "float-demos"}


def test_missing_argument_exits_through_argparse(capsys):
    with pytest.raises(SystemExit) as info:
        main(["terms"])
    assert info.value.code == 2


class TestSettings:
    def test_only_diagnostics_are_configurable(self):
        assert set(Settings.model_fields) == {"log_level", "recursion_limit"}

    def test_environment_does_not_change_results(self, capsys, monkeypatch):
        monkeypatch.setenv("SEQALG_DEFAULT_TERMS", "3")
        monkeypatch.setenv("SEQALG_ZERO_SCAN_LIMIT", "2")
        monkeypatch.setattr(cli_main, "settings", load_settings())
        _, out, _ = run(capsys, "terms", "catalan")
        assert out == "[1,1,2,5,14,42,132,429,1430,4862]\n"
        code, out, _ = run(capsys, "terms", "-n", "3", "x^3/(x^3*(1/(1-x)))")
        assert code == EXIT_OK
        assert out == "[1,-1,0]\n"

    def test_log_level_is_normalised(self, monkeypatch):
        monkeypatch.setenv("SEQALG_LOG_LEVEL", " debug ")
        assert load_settings().log_level == "DEBUG"

    def test_run_metadata(self):
        assert run_metadata("terms", "gaussian/univariate") == {
            "command": "terms",
            "mode": "gaussian/univariate",
        }
        assert run_metadata("names") == {"command": "names", "mode": "rational/univariate"}
