"""Parser for polynomial expressions.

Grammar (whitespace is ignored)::

    expr    := term (("+" | "-") term)*
    term    := unary ("*" unary)*
    unary   := "-" unary | power
    power   := primary ("^" unary)?          # right-associative
    primary := INT ("/" INT)? | VAR | "(" expr ")"

Variables are ``x1 ... xn``; when ``n <= 3`` the names ``x``, ``y``, ``z``
alias ``x1``, ``x2``, ``x3``.  Exponents must evaluate to nonnegative
integer constants.  Juxtaposition (``2x1``, ``x1 x2``) is rejected.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from typing import List, Tuple, Union

from .errors import ParseError
from .poly import Polynomial

_ALIASES = {"x": 0, "y": 1, "z": 2}
_TOKEN = re.compile(r"(\d+)|([A-Za-z_][A-Za-z0-9_]*)|(.)", re.S)
_INDEXED = re.compile(r"x([1-9][0-9]*)\Z")


@dataclass(frozen=True)
class Token:
    kind: str  # "int", "name", "op", "end"
    text: str
    pos: int


@dataclass(frozen=True)
class Num:
    value: Fraction
    pos: int


@dataclass(frozen=True)
class Var:
    name: str
    pos: int


@dataclass(frozen=True)
class Neg:
    operand: "Node"
    pos: int


@dataclass(frozen=True)
class BinOp:
    op: str
    left: "Node"
    right: "Node"
    pos: int


Node = Union[Num, Var, Neg, BinOp]


def _line_col(src: str, pos: int) -> Tuple[int, int]:
    line = src.count("\n", 0, pos) + 1
    col = pos - (src.rfind("\n", 0, pos) + 1) + 1
    return line, col


def _error(src: str, pos: int, message: str) -> ParseError:
    return ParseError(message, *_line_col(src, pos))


def tokenize(src: str) -> List[Token]:
    tokens = []
    pos = 0
    while True:
        while pos < len(src) and src[pos].isspace():
            pos += 1
        if pos == len(src):
            break
        m = _TOKEN.match(src, pos)
        if m.group(1) is not None:
            tokens.append(Token("int", m.group(1), pos))
        elif m.group(2) is not None:
            tokens.append(Token("name", m.group(2), pos))
        else:
            ch = m.group(3)
            if ch not in "+-*/^()":
                raise _error(src, pos, f"unexpected character {ch!r}")
            tokens.append(Token("op", ch, pos))
        pos = m.end()
    tokens.append(Token("end", "", len(src)))
    return tokens


class _Parser:
    def __init__(self, src: str):
        self.src = src
        self.tokens = tokenize(src)
        self.i = 0

    def peek(self) -> Token:
        return self.tokens[self.i]

    def take(self) -> Token:
        tok = self.tokens[self.i]
        self.i += 1
        return tok

    def accept(self, text: str) -> Token | None:
        tok = self.peek()
        if tok.kind == "op" and tok.text == text:
            self.i += 1
            return tok
        return None

    def fail(self, tok: Token, message: str) -> ParseError:
        return _error(self.src, tok.pos, message)

    def parse(self) -> Node:
        if self.peek().kind == "end":
            raise self.fail(self.peek(), "empty expression")
        node = self.expr()
        tok = self.peek()
        if tok.kind != "end":
            if tok.kind in ("int", "name") or tok.text == "(":
                raise self.fail(tok, f"unexpected {tok.text!r}; implicit multiplication is not allowed")
            raise self.fail(tok, f"unexpected {tok.text!r}")
        return node

    def expr(self) -> Node:
        node = self.term()
        while True:
            tok = self.accept("+") or self.accept("-")
            if tok is None:
                return node
            node = BinOp(tok.text, node, self.term(), tok.pos)

    def term(self) -> Node:
        node = self.unary()
        while True:
            tok = self.accept("*")
            if tok is None:
                return node
            node = BinOp("*", node, self.unary(), tok.pos)

    def unary(self) -> Node:
        tok = self.accept("-")
        if tok is not None:
            return Neg(self.unary(), tok.pos)
        return self.power()

    def power(self) -> Node:
        base = self.primary()
        tok = self.accept("^")
        if tok is None:
            return base
        return BinOp("^", base, self.unary(), tok.pos)

    def primary(self) -> Node:
        tok = self.take()
        if tok.kind == "int":
            value = Fraction(int(tok.text))
            slash = self.accept("/")
            if slash is not None:
                den = self.take()
                if den.kind != "int":
                    raise self.fail(den, "expected an integer denominator")
                if int(den.text) == 0:
                    raise self.fail(den, "zero denominator")
                value /= int(den.text)
            return Num(value, tok.pos)
        if tok.kind == "name":
            return Var(tok.text, tok.pos)
        if tok.kind == "op" and tok.text == "(":
            node = self.expr()
            if self.accept(")") is None:
                raise self.fail(self.peek(), "expected ')'")
            return node
        if tok.kind == "end":
            raise self.fail(tok, "unexpected end of input")
        raise self.fail(tok, f"unexpected {tok.text!r}")


def parse_expression(src: str) -> Node:
    """Parse ``src`` into an expression tree without resolving variables."""
    return _Parser(src).parse()


def variable_index(name: str, n: int) -> int | None:
    m = _INDEXED.match(name)
    if m:
        return int(m.group(1)) - 1
    if n <= 3 and name in _ALIASES:
        return _ALIASES[name]
    return None


def lower(node: Node, n: int, src: str = "") -> Polynomial:
    """Evaluate an expression tree to a :class:`Polynomial` in ``n`` variables."""
    if isinstance(node, Num):
        return Polynomial.constant(n, node.value)
    if isinstance(node, Var):
        idx = variable_index(node.name, n)
        if idx is None:
            raise _error(src, node.pos, f"unknown variable {node.name!r}")
        if idx >= n:
            raise _error(src, node.pos, f"variable {node.name!r} exceeds dimension {n}")
        return Polynomial.variable(n, idx)
    if isinstance(node, Neg):
        return -lower(node.operand, n, src)
    left = lower(node.left, n, src)
    right = lower(node.right, n, src)
    if node.op == "+":
        return left + right
    if node.op == "-":
        return left - right
    if node.op == "*":
        return left * right
    if right.degree > 0:
        raise _error(src, node.pos, "exponent must be a constant")
    k = right.constant_term()
    if k.denominator != 1:
        raise _error(src, node.pos, f"fractional exponent {k}")
    if k < 0:
        raise _error(src, node.pos, f"negative exponent {k}")
    return left ** int(k)


def parse_polynomial(src: str, n: int) -> Polynomial:
    if n < 2:
        raise ValueError("dimension must be at least 2")
    return lower(parse_expression(src), n, src)
