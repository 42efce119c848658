"""
Unit tests for the expression parser and renderer (seqalg/cli/syntax.py).
"""
import pytest
from hypothesis import given

from seqalg.bivariate import registry_entries
from seqalg.cli.syntax import (
    Add,
    Call,
    Compose,
    Div,
    Mul,
    Name,
    Neg,
    Num,
    Pow,
    Sub,
    parse,
    parse_definition,
    render,
    tokenize,
)
from seqalg.errors import ExprSyntaxError
from tests.strategies import exprs

x, f, g, h = (Name(name=n) for n in "xfgh")


def num(v):
    return Num(value=v)


class TestTokenize:
    def test_kinds_and_offsets(self):
        tokens = list(tokenize("f o (x+12)"))
        assert [(t.kind, t.text, t.offset) for t in tokens] == [
            ("name", "f", 0),
            ("op", "o", 2),
            ("op", "(", 4),
            ("name", "x", 5),
            ("op", "+", 6),
            ("number", "12", 7),
            ("op", ")", 9),
            ("end", "", 10),
        ]

    def test_o_prefix_is_a_name(self):
        kinds = [t.kind for t in tokenize("oneCycle o x")]
        assert kinds == ["name", "op", "name", "end"]

    def test_bad_character(self):
        with pytest.raises(ExprSyntaxError) as info:
            list(tokenize("x + $"))
        assert info.value.offset == 4


class TestPrecedence:
    @pytest.mark.parametrize(
        "src, tree",
        [
            ("1+2*3", Add(left=num(1), right=Mul(left=num(2), right=num(3)))),
            ("1-2-3", Sub(left=Sub(left=num(1), right=num(2)), right=num(3))),
            ("-x^2", Neg(operand=Pow(left=x, right=num(2)))),
            ("-x*2", Mul(left=Neg(operand=x), right=num(2))),
            ("2*f o g", Mul(left=num(2), right=Compose(left=f, right=g))),
            ("f o g o h", Compose(left=Compose(left=f, right=g), right=h)),
            ("f o g^2", Compose(left=f, right=Pow(left=g, right=num(2)))),
            ("x^2^3", Pow(left=x, right=Pow(left=num(2), right=num(3)))),
            ("x/2/3", Div(left=Div(left=x, right=num(2)), right=num(3))),
            ("(1+x)*x", Mul(left=Add(left=num(1), right=x), right=x)),
        ],
    )
    def test_tree(self, src, tree):
        assert parse(src) == tree

    def test_calls(self):
        assert parse("shuffle(x, x^2)") == Call(name="shuffle", args=(x, Pow(left=x, right=num(2))))
        assert parse("deriv(f) o g") == Compose(left=Call(name="deriv", args=(f,)), right=g)


class TestSyntaxErrors:
    @pytest.mark.parametrize(
        "src, offset, expected",
        [
            ("1+*x", 2, "number"),
            ("(1+x", 4, "')'"),
            ("1 2", 2, "end of input"),
            ("", 0, "name"),
            ("f(x,", 4, "'('"),
        ],
    )
    def test_offset_and_expected(self, src, offset, expected):
        with pytest.raises(ExprSyntaxError) as info:
            parse(src)
        assert info.value.offset == offset
        assert expected in info.value.expected
        assert f"at offset {offset}" in str(info.value)

    def test_definition_offsets_are_relative_to_the_whole_line(self):
        with pytest.raises(ExprSyntaxError) as info:
            parse_definition("f = 1+*x")
        assert info.value.offset == 6

    def test_definition_needs_equals(self):
        with pytest.raises(ExprSyntaxError):
            parse_definition("1 + x")


class TestRender:
    @pytest.mark.parametrize(
        "src, text",
        [
            ("(x+1)*(x-1)", "(x + 1)*(x - 1)"),
            ("f o (g o h)", "f o (g o h)"),
            ("(f o g) o h", "f o g o h"),
            ("(x^2)^3", "(x^2)^3"),
            ("x-(1-x)", "x - (1 - x)"),
            ("-(x+1)", "-(x + 1)"),
            ("(-x)^2", "(-x)^2"),
            ("pow(1+x,1/2)", "pow(1 + x, 1/2)"),
        ],
    )
    def test_minimal_parentheses(self, src, text):
        assert render(parse(src)) == text

    @given(exprs)
    def test_reparse_is_identity(self, expr):
        assert parse(render(expr)) == expr

    def test_registry_corpus_round_trips(self):
        for entry in registry_entries():
            name, expr = parse_definition(entry.definition)
            assert name == entry.name
            assert parse(render(expr)) == expr
