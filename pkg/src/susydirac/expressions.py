"""Tiny arithmetic expressions for user-defined superpotentials f(x).

Grammar: numbers, the single variable x, unary minus, the binary operators
+ - * / ^, parentheses, and the call whitelist tanh, cosh, sinh, sech, exp,
sqrt, abs. Precedence from loosest to tightest is + - , * / , unary minus,
^ ; the power operator is right-associative and binds tighter than unary
minus, so -x^2 means -(x^2) and 2^3^2 means 2^(3^2). Whitespace is
insignificant. Every input yields either an AST or a diagnostic with a byte
offset; evaluation reports division by zero and non-finite results instead
of letting them propagate.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable, NamedTuple, Union

import numpy as np

from .numerics import Grid, SampledFunction

FUNCTIONS: dict[str, Callable[[float], float]] = {
    "tanh": math.tanh,
    "cosh": math.cosh,
    "sinh": math.sinh,
    "sech": lambda v: 1.0 / math.cosh(v),
    "exp": math.exp,
    "sqrt": math.sqrt,
    "abs": abs,
}

_BINARY_BP = {
    "+": (10, 11),
    "-": (10, 11),
    "*": (20, 21),
    "/": (20, 21),
    "^": (40, 40),  # right-associative
}
_UNARY_BP = 30  # below ^, above * /


class ExprError(ValueError):
    """Base class for expression diagnostics."""


class ExprSyntaxError(ExprError):
    """Malformed source text; carries the byte offset of the problem."""

    def __init__(self, message: str, offset: int):
        super().__init__(f"syntax error at offset {offset}: {message}")
        self.offset = offset


class UnknownIdentifierError(ExprSyntaxError):
    """An identifier that is neither x nor a whitelisted function."""


class EvalDomainError(ExprError):
    """Evaluation produced a non-finite value; names the subexpression."""


@dataclass(frozen=True)
class Number:
    value: float


@dataclass(frozen=True)
class Variable:
    pass


@dataclass(frozen=True)
class Negate:
    operand: "ExprAst"


@dataclass(frozen=True)
class BinaryOp:
    op: str
    left: "ExprAst"
    right: "ExprAst"


@dataclass(frozen=True)
class Call:
    name: str
    arg: "ExprAst"


ExprAst = Union[Number, Variable, Negate, BinaryOp, Call]


class _Token(NamedTuple):
    kind: str  # "number" | "ident" | "op" | "end"
    text: str
    offset: int


def _tokenize(src: str) -> list[_Token]:
    tokens: list[_Token] = []
    i = 0
    n = len(src)
    while i < n:
        ch = src[i]
        if ch.isspace():
            i += 1
            continue
        if ch.isdigit() or (ch == "." and i + 1 < n and src[i + 1].isdigit()):
            start = i
            while i < n and (src[i].isdigit() or src[i] == "."):
                i += 1
            if i < n and src[i] in "eE":
                mark = i
                i += 1
                if i < n and src[i] in "+-":
                    i += 1
                if i < n and src[i].isdigit():
                    while i < n and src[i].isdigit():
                        i += 1
                else:
                    i = mark  # the e starts an identifier, not an exponent
            text = src[start:i]
            try:
                value = float(text)
            except ValueError:
                raise ExprSyntaxError(f"malformed number '{text}'", start) from None
            if not math.isfinite(value):
                raise ExprSyntaxError(f"number literal '{text}' overflows", start)
            tokens.append(_Token("number", text, start))
            continue
        if ch.isalpha() or ch == "_":
            start = i
            while i < n and (src[i].isalnum() or src[i] == "_"):
                i += 1
            tokens.append(_Token("ident", src[start:i], start))
            continue
        if ch in "+-*/^()":
            tokens.append(_Token("op", ch, i))
            i += 1
            continue
        raise ExprSyntaxError(f"unexpected character {ch!r}", i)
    tokens.append(_Token("end", "", n))
    return tokens


class _Parser:
    def __init__(self, tokens: list[_Token]):
        self.tokens = tokens
        self.pos = 0

    def peek(self) -> _Token:
        return self.tokens[self.pos]

    def advance(self) -> _Token:
        tok = self.tokens[self.pos]
        if tok.kind != "end":
            self.pos += 1
        return tok

    def expression(self, min_bp: int) -> ExprAst:
        lhs = self.prefix()
        while True:
            tok = self.peek()
            if tok.kind != "op" or tok.text not in _BINARY_BP:
                break
            left_bp, right_bp = _BINARY_BP[tok.text]
            if left_bp < min_bp:
                break
            self.advance()
            lhs = BinaryOp(tok.text, lhs, self.expression(right_bp))
        return lhs

    def prefix(self) -> ExprAst:
        tok = self.advance()
        if tok.kind == "number":
            return Number(float(tok.text))
        if tok.kind == "ident":
            if tok.text == "x":
                return Variable()
            if tok.text in FUNCTIONS:
                opener = self.peek()
                if opener.kind != "op" or opener.text != "(":
                    raise ExprSyntaxError(
                        f"expected '(' after function '{tok.text}'", opener.offset
                    )
                self.advance()
                arg = self.expression(0)
                closer = self.peek()
                if closer.kind != "op" or closer.text != ")":
                    raise ExprSyntaxError("expected ')'", closer.offset)
                self.advance()
                return Call(tok.text, arg)
            raise UnknownIdentifierError(
                f"unknown identifier '{tok.text}'", tok.offset
            )
        if tok.kind == "op" and tok.text == "-":
            return Negate(self.expression(_UNARY_BP))
        if tok.kind == "op" and tok.text == "(":
            inner = self.expression(0)
            closer = self.peek()
            if closer.kind != "op" or closer.text != ")":
                raise ExprSyntaxError("expected ')'", closer.offset)
            self.advance()
            return inner
        if tok.kind == "end":
            raise ExprSyntaxError("expected expression", tok.offset)
        raise ExprSyntaxError(
            f"expected expression, found '{tok.text}'", tok.offset
        )


def parse(src: str) -> ExprAst:
    """Parse source text into an AST, or raise ExprSyntaxError."""
    parser = _Parser(_tokenize(src))
    ast = parser.expression(0)
    trailing = parser.peek()
    if trailing.kind != "end":
        raise ExprSyntaxError(
            f"unexpected trailing input '{trailing.text}'", trailing.offset
        )
    return ast


def to_text(ast: ExprAst) -> str:
    """Canonical fully parenthesized rendering; reparsing gives an equal AST."""
    if isinstance(ast, Number):
        return repr(ast.value)
    if isinstance(ast, Variable):
        return "x"
    if isinstance(ast, Negate):
        return f"(-{to_text(ast.operand)})"
    if isinstance(ast, BinaryOp):
        return f"({to_text(ast.left)} {ast.op} {to_text(ast.right)})"
    if isinstance(ast, Call):
        return f"{ast.name}({to_text(ast.arg)})"
    raise TypeError(f"not an expression node: {ast!r}")


def _check_finite(value: float, node: ExprAst, x: float) -> float:
    if isinstance(value, complex) or not math.isfinite(value):
        raise EvalDomainError(
            f"non-finite result from '{to_text(node)}' at x = {x}"
        )
    return float(value)


def evaluate(ast: ExprAst, x: float) -> float:
    """Evaluate the AST at a point, raising EvalDomainError on bad values."""
    if isinstance(ast, Number):
        return ast.value
    if isinstance(ast, Variable):
        return float(x)
    if isinstance(ast, Negate):
        return -evaluate(ast.operand, x)
    if isinstance(ast, BinaryOp):
        left = evaluate(ast.left, x)
        right = evaluate(ast.right, x)
        try:
            if ast.op == "+":
                value = left + right
            elif ast.op == "-":
                value = left - right
            elif ast.op == "*":
                value = left * right
            elif ast.op == "/":
                value = left / right
            else:
                value = left**right
        except (ZeroDivisionError, OverflowError, ValueError) as exc:
            raise EvalDomainError(
                f"non-finite result from '{to_text(ast)}' at x = {x}: {exc}"
            ) from None
        return _check_finite(value, ast, x)
    if isinstance(ast, Call):
        arg = evaluate(ast.arg, x)
        try:
            value = FUNCTIONS[ast.name](arg)
        except (OverflowError, ValueError) as exc:
            raise EvalDomainError(
                f"non-finite result from '{to_text(ast)}' at x = {x}: {exc}"
            ) from None
        return _check_finite(value, ast, x)
    raise TypeError(f"not an expression node: {ast!r}")


def sample(ast: ExprAst, grid: Grid) -> SampledFunction:
    """Evaluate the AST over a grid; eval errors gain the grid index."""
    values = np.empty(grid.n)
    for i, xv in enumerate(grid.points):
        try:
            values[i] = evaluate(ast, float(xv))
        except EvalDomainError as exc:
            raise EvalDomainError(f"at grid index {i}: {exc}") from exc
    return SampledFunction(grid, values)
