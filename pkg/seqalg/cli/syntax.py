"""
Expression syntax for the command line.

    expr := number | name | name "(" expr ("," expr)* ")" | "(" expr ")"
          | "-" expr | expr op expr

Binding, loosest first:

    + -      10  left
    * /      20  left
    unary -  25
    o        30  left   (composition)
    ^        40  right

so `-x^2` is -(x^2), `2*f o g` is 2*(f o g) and `f o g o h` is (f o g) o h.
Parsing is Pratt-style: every token has a null denotation (prefix position)
and a left denotation with a binding power (infix position).
"""

from __future__ import annotations

import logging
import re
from typing import ClassVar, Iterator, NamedTuple

from pydantic import BaseModel, ConfigDict

from seqalg.errors import ExprSyntaxError

logger = logging.getLogger(__name__)

ADD = 10
MUL = 20
NEG = 25
COMPOSE = 30
POW = 40
ATOM = 100

_TOKEN = re.compile(r"\s*(?:(?P<number>\d+)|(?P<name>[A-Za-z_][A-Za-z0-9_]*)|(?P<op>[-+*/^(),]))")

_PRIMARY = ("number", "name", "'('", "'-'")


# ---------------------------------------------------------------------------
# Syntax tree
# ---------------------------------------------------------------------------

class Expr(BaseModel):
    model_config = ConfigDict(frozen=True)

    precedence: ClassVar[int] = ATOM


class Num(Expr):
    value: int


class Name(Expr):
    name: str


class Neg(Expr):
    precedence: ClassVar[int] = NEG

    operand: Expr


class BinOp(Expr):
    symbol: ClassVar[str] = "?"
    right_assoc: ClassVar[bool] = False

    left: Expr
    right: Expr


class Add(BinOp):
    precedence: ClassVar[int] = ADD
    symbol: ClassVar[str] = "+"


class Sub(BinOp):
    precedence: ClassVar[int] = ADD
    symbol: ClassVar[str] = "-"


class Mul(BinOp):
    precedence: ClassVar[int] = MUL
    symbol: ClassVar[str] = "*"


class Div(BinOp):
    precedence: ClassVar[int] = MUL
    symbol: ClassVar[str] = "/"


class Compose(BinOp):
    precedence: ClassVar[int] = COMPOSE
    symbol: ClassVar[str] = "o"


class Pow(BinOp):
    precedence: ClassVar[int] = POW
    symbol: ClassVar[str] = "^"
    right_assoc: ClassVar[bool] = True


class Call(Expr):
    name: str
    args: tuple[Expr, ...]


_INFIX: dict[str, type[BinOp]] = {
    "+": Add,
    "-": Sub,
    "*": Mul,
    "/": Div,
    "o": Compose,
    "^": Pow,
}


# ---------------------------------------------------------------------------
# Tokens
# ---------------------------------------------------------------------------

class Token(NamedTuple):
    kind: str  # number | name | op | end
    text: str
    offset: int


def tokenize(src: str) -> Iterator[Token]:
    pos = 0
    while True:
        match = _TOKEN.match(src, pos)
        if match is None:
            rest = src[pos:]
            stripped = rest.lstrip()
            if not stripped:
                yield Token("end", "", len(src.encode()))
                return
            offset = len(src[: pos + len(rest) - len(stripped)].encode())
            raise ExprSyntaxError(f"unexpected character {stripped[0]!r}", offset)
        kind = match.lastgroup
        text = match.group(kind)
        start = match.start(kind)
        if kind == "name" and text == "o":
            kind = "op"
        yield Token(kind, text, len(src[:start].encode()))
        pos = match.end()


# ---------------------------------------------------------------------------
# Parser
# ---------------------------------------------------------------------------

class Parser:
    def __init__(self, src: str) -> None:
        self.tokens = list(tokenize(src))
        self.pos = 0

    @property
    def token(self) -> Token:
        return self.tokens[self.pos]

    def advance(self) -> Token:
        tok = self.tokens[self.pos]
        if tok.kind != "end":
            self.pos += 1
        return tok

    def expect(self, text: str) -> None:
        tok = self.token
        if tok.kind != "op" or tok.text != text:
            raise ExprSyntaxError(f"unexpected {_describe(tok)}", tok.offset, [f"'{text}'"])
        self.advance()

    def parse(self) -> Expr:
        expr = self.expression(0)
        tok = self.token
        if tok.kind != "end":
            raise ExprSyntaxError(f"unexpected {_describe(tok)}", tok.offset, ["operator", "end of input"])
        return expr

    def expression(self, rbp: int) -> Expr:
        left = self.nud(self.advance())
        while rbp < self.lbp(self.token):
            left = self.led(self.advance(), left)
        return left

    @staticmethod
    def lbp(tok: Token) -> int:
        if tok.kind == "op" and tok.text in _INFIX:
            return _INFIX[tok.text].precedence
        return 0

    def nud(self, tok: Token) -> Expr:
        if tok.kind == "number":
            return Num(value=int(tok.text))
        if tok.kind == "name":
            if self.token.kind == "op" and self.token.text == "(":
                self.advance()
                return Call(name=tok.text, args=self.arguments())
            return Name(name=tok.text)
        if tok.kind == "op" and tok.text == "(":
            inner = self.expression(0)
            self.expect(")")
            return inner
        if tok.kind == "op" and tok.text == "-":
            return Neg(operand=self.expression(NEG))
        raise ExprSyntaxError(f"unexpected {_describe(tok)}", tok.offset, _PRIMARY)

    def led(self, tok: Token, left: Expr) -> Expr:
        node = _INFIX[tok.text]
        rbp = node.precedence - 1 if node.right_assoc else node.precedence
        return node(left=left, right=self.expression(rbp))

    def arguments(self) -> tuple[Expr, ...]:
        args = [self.expression(0)]
        while self.token.kind == "op" and self.token.text == ",":
            self.advance()
            args.append(self.expression(0))
        self.expect(")")
        return tuple(args)


def _describe(tok: Token) -> str:
    return "end of input" if tok.kind == "end" else repr(tok.text)


def parse(src: str) -> Expr:
    """Parse one expression; failures raise ExprSyntaxError with a byte offset."""
    expr = Parser(src).parse()
    logger.debug("parsed %r", src)
    return expr


def parse_definition(text: str) -> tuple[str, Expr]:
    """Split `name = expr` and parse the right-hand side."""
    name, sep, body = text.partition("=")
    if not sep or not name.strip():
        raise ExprSyntaxError("expected 'name = expression'", 0, ["'='"])
    offset = len((name + sep).encode())
    try:
        return name.strip(), parse(body)
    except ExprSyntaxError as exc:
        raise ExprSyntaxError(exc.message.rsplit(" at offset", 1)[0], exc.offset + offset, exc.expected) from None


# ---------------------------------------------------------------------------
# Rendering
# ---------------------------------------------------------------------------

def _wrap(expr: Expr, needs_parens: bool) -> str:
    text = render(expr)
    return f"({text})" if needs_parens else text


def render(expr: Expr) -> str:
    """Source text with the fewest parentheses that parse back to `expr`."""
    if isinstance(expr, Num):
        return str(expr.value)
    if isinstance(expr, Name):
        return expr.name
    if isinstance(expr, Call):
        return f"{expr.name}({', '.join(render(a) for a in expr.args)})"
    if isinstance(expr, Neg):
        return "-" + _wrap(expr.operand, expr.operand.precedence < NEG)
    if isinstance(expr, BinOp):
        p = expr.precedence
        if expr.right_assoc:
            left = _wrap(expr.left, expr.left.precedence <= p)
            right = _wrap(expr.right, expr.right.precedence < p)
        else:
            left = _wrap(expr.left, expr.left.precedence < p)
            right = _wrap(expr.right, expr.right.precedence <= p)
        if expr.symbol in "+-o":
            return f"{left} {expr.symbol} {right}"
        return f"{left}{expr.symbol}{right}"
    raise TypeError(f"not an expression: {expr!r}")
