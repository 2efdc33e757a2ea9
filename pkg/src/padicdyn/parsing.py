"""Polynomial expression parser.

Grammar (whitespace-insensitive):

    expr    := term (('+' | '-') term)*
    term    := factor (('*' factor) | factor)*     implicit product when
                                                   the next factor starts
                                                   with 'x' or '('
    factor  := ('+' | '-')* power
    power   := atom ('^' INT)*
    atom    := INT | 'x' | '(' expr ')'

'^' binds tighter than multiplication, which binds tighter than '+'/'-';
exponents are nonnegative integer literals capped at 10^4.  Expressions
are expanded at parse time into canonical coefficients, so "(x+1)^2"
yields 1 + 2x + x^2.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import PolyParseError
from .polynomial import IntPoly

MAX_EXPONENT = 10_000

_INT = "int"
_X = "x"
_OP = "op"
_END = "end"


@dataclass(frozen=True)
class _Token:
    kind: str
    text: str
    position: int
    value: int = 0


def _tokenize(text: str) -> list[_Token]:
    tokens = []
    i, n = 0, len(text)
    while i < n:
        c = text[i]
        if c.isspace():
            i += 1
            continue
        if c.isdigit():
            start = i
            while i < n and text[i].isdigit():
                i += 1
            tokens.append(_Token(_INT, text[start:i], start, int(text[start:i])))
            continue
        if c == "x":
            tokens.append(_Token(_X, c, i))
            i += 1
            continue
        if c in "+-*^()":
            tokens.append(_Token(_OP, c, i))
            i += 1
            continue
        raise PolyParseError(f"unexpected character {c!r}", i)
    tokens.append(_Token(_END, "", n))
    return tokens


class _Parser:
    def __init__(self, text: str):
        self.tokens = _tokenize(text)
        self.pos = 0

    def peek(self) -> _Token:
        return self.tokens[self.pos]

    def advance(self) -> _Token:
        tok = self.tokens[self.pos]
        self.pos += 1
        return tok

    def expect_op(self, text: str) -> None:
        tok = self.peek()
        if tok.kind != _OP or tok.text != text:
            raise PolyParseError(f"expected {text!r}", tok.position)
        self.advance()

    def parse(self) -> IntPoly:
        result = self.expr()
        tok = self.peek()
        if tok.kind != _END:
            raise PolyParseError(f"unexpected token {tok.text!r}", tok.position)
        return result

    def expr(self) -> IntPoly:
        result = self.term()
        while True:
            tok = self.peek()
            if tok.kind == _OP and tok.text in "+-":
                self.advance()
                rhs = self.term()
                result = result + rhs if tok.text == "+" else result - rhs
            else:
                return result

    def term(self) -> IntPoly:
        result = self.factor()
        while True:
            tok = self.peek()
            if tok.kind == _OP and tok.text == "*":
                self.advance()
                result = result * self.factor()
            elif tok.kind == _X or (tok.kind == _OP and tok.text == "("):
                # Implicit product: "7x", "2(x+1)", "(x+1)(x-1)".
                result = result * self.factor()
            else:
                return result

    def factor(self) -> IntPoly:
        sign = 1
        while True:
            tok = self.peek()
            if tok.kind == _OP and tok.text in "+-":
                if tok.text == "-":
                    sign = -sign
                self.advance()
            else:
                break
        return sign * self.power()

    def power(self) -> IntPoly:
        result = self.atom()
        while True:
            tok = self.peek()
            if tok.kind != _OP or tok.text != "^":
                return result
            self.advance()
            exp = self.peek()
            if exp.kind != _INT:
                raise PolyParseError(
                    "exponent must be a nonnegative integer literal", exp.position
                )
            if exp.value > MAX_EXPONENT:
                raise PolyParseError(
                    f"exponent {exp.value} exceeds the limit {MAX_EXPONENT}",
                    exp.position,
                )
            self.advance()
            result = result**exp.value

    def atom(self) -> IntPoly:
        tok = self.peek()
        if tok.kind == _INT:
            self.advance()
            return IntPoly.constant(tok.value)
        if tok.kind == _X:
            self.advance()
            return IntPoly.x()
        if tok.kind == _OP and tok.text == "(":
            self.advance()
            inner = self.expr()
            self.expect_op(")")
            return inner
        raise PolyParseError(
            f"expected a number, 'x', or '(', got {tok.text or 'end of input'!r}",
            tok.position,
        )


def parse_poly(text: str) -> IntPoly:
    """Parse a polynomial expression in x into canonical coefficients."""
    return _Parser(text).parse()
