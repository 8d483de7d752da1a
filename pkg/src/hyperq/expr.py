"""Component-expression AST, parser and printer.

Grammar (whitespace insignificant):

    program := "f1" "=" expr ";" "f2" "=" expr [";"]
    expr    := term (("+"|"-") term)*
    term    := factor ("*" factor)*
    factor  := atom ["^" integer]
    atom    := "z1" | "z2" | "conj" "(" expr ")" | "recip" "(" expr ")"
             | "-" atom | "(" expr ")" | literal
    literal := decimal | "(" decimal "," decimal ")"    # re + i*im

Exponents are non-negative; negative powers go through recip().  An
expression evaluates over plain complex numbers or over WirtingerJet values
through the same code path.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field

from .errors import ParseError, SingularValue
from .jets import WirtingerJet, seed_const
from .quaternion import EPS_SING


# ---------------------------------------------------------------------------
# AST


class Expr:
    __slots__ = ()

    def evaluate(self, z1, z2):
        raise NotImplementedError


@dataclass(frozen=True)
class Var(Expr):
    name: str  # "z1" or "z2"

    def evaluate(self, z1, z2):
        return z1 if self.name == "z1" else z2


@dataclass(frozen=True)
class Lit(Expr):
    value: complex
    text: str | None = field(default=None, compare=False)

    def evaluate(self, z1, z2):
        return _lift(self.value, z1)


@dataclass(frozen=True)
class Neg(Expr):
    arg: Expr

    def evaluate(self, z1, z2):
        return -self.arg.evaluate(z1, z2)


@dataclass(frozen=True)
class Conj(Expr):
    arg: Expr

    def evaluate(self, z1, z2):
        return self.arg.evaluate(z1, z2).conjugate()


@dataclass(frozen=True)
class Recip(Expr):
    arg: Expr

    def evaluate(self, z1, z2):
        return _recip(self.arg.evaluate(z1, z2))


@dataclass(frozen=True)
class Add(Expr):
    left: Expr
    right: Expr

    def evaluate(self, z1, z2):
        return self.left.evaluate(z1, z2) + self.right.evaluate(z1, z2)


@dataclass(frozen=True)
class Mul(Expr):
    left: Expr
    right: Expr

    def evaluate(self, z1, z2):
        return self.left.evaluate(z1, z2) * self.right.evaluate(z1, z2)


@dataclass(frozen=True)
class Pow(Expr):
    base: Expr
    exponent: int

    def evaluate(self, z1, z2):
        b = self.base.evaluate(z1, z2)
        out = _lift(1, z1)
        for _ in range(self.exponent):
            out = out * b
        return out


Z1 = Var("z1")
Z2 = Var("z2")


def _lift(value, like):
    if isinstance(like, WirtingerJet):
        return seed_const(value)
    return complex(value)


def _recip(v):
    if isinstance(v, WirtingerJet):
        return v.recip()
    if abs(v) ** 2 <= EPS_SING:
        raise SingularValue(f"reciprocal of near-zero value {v!r}")
    return 1 / v


def walk(expr: Expr):
    """Yield expr and all its subexpressions, parents first."""
    yield expr
    if isinstance(expr, (Neg, Conj, Recip)):
        yield from walk(expr.arg)
    elif isinstance(expr, (Add, Mul)):
        yield from walk(expr.left)
        yield from walk(expr.right)
    elif isinstance(expr, Pow):
        yield from walk(expr.base)


# ---------------------------------------------------------------------------
# Tokenizer

_TOKEN_RE = re.compile(
    r"(?P<ws>\s+)"
    r"|(?P<name>[A-Za-z_][A-Za-z_0-9]*)"
    r"|(?P<number>(?:\d+\.?\d*|\.\d+)(?:[eE][+-]?\d+)?)"
    r"|(?P<sym>[-+*^(),;=])"
)


@dataclass(frozen=True)
class _Token:
    kind: str  # "name" | "number" | "sym" | "eof"
    text: str
    line: int
    column: int


def _tokenize(text: str) -> list[_Token]:
    tokens = []
    line, col = 1, 1
    pos = 0
    while pos < len(text):
        m = _TOKEN_RE.match(text, pos)
        if m is None:
            raise ParseError(f"unexpected character {text[pos]!r}", line, col)
        kind = m.lastgroup
        chunk = m.group()
        if kind != "ws":
            tokens.append(_Token(kind, chunk, line, col))
        newlines = chunk.count("\n")
        if newlines:
            line += newlines
            col = len(chunk) - chunk.rfind("\n")
        else:
            col += len(chunk)
        pos = m.end()
    tokens.append(_Token("eof", "", line, col))
    return tokens


# ---------------------------------------------------------------------------
# Parser

_ATOM_EXPECTED = ("z1", "z2", "conj", "recip", "-", "(", "number")


class _Parser:
    def __init__(self, text: str):
        self.tokens = _tokenize(text)
        self.pos = 0

    def peek(self, ahead: int = 0) -> _Token:
        return self.tokens[min(self.pos + ahead, len(self.tokens) - 1)]

    def advance(self) -> _Token:
        tok = self.tokens[self.pos]
        if tok.kind != "eof":
            self.pos += 1
        return tok

    def fail(self, message: str, expected=()):
        tok = self.peek()
        raise ParseError(message, tok.line, tok.column, expected)

    def expect_sym(self, sym: str) -> _Token:
        tok = self.peek()
        if tok.kind != "sym" or tok.text != sym:
            self.fail(f"found {tok.text!r}" if tok.kind != "eof" else "unexpected end of input",
                      expected={sym})
        return self.advance()

    def expect_name(self, name: str) -> _Token:
        tok = self.peek()
        if tok.kind != "name" or tok.text != name:
            self.fail(f"found {tok.text!r}" if tok.kind != "eof" else "unexpected end of input",
                      expected={name})
        return self.advance()

    # grammar rules

    def program(self) -> tuple[Expr, Expr]:
        self.expect_name("f1")
        self.expect_sym("=")
        first = self.expr()
        self.expect_sym(";")
        self.expect_name("f2")
        self.expect_sym("=")
        second = self.expr()
        if self.peek().kind == "sym" and self.peek().text == ";":
            self.advance()
        if self.peek().kind != "eof":
            self.fail(f"trailing input {self.peek().text!r}", expected={"end of input"})
        return first, second

    def expr(self) -> Expr:
        node = self.term()
        while self.peek().kind == "sym" and self.peek().text in "+-":
            op = self.advance().text
            rhs = self.term()
            node = Add(node, rhs if op == "+" else Neg(rhs))
        return node

    def term(self) -> Expr:
        node = self.factor()
        while self.peek().kind == "sym" and self.peek().text == "*":
            self.advance()
            node = Mul(node, self.factor())
        return node

    def factor(self) -> Expr:
        node = self.atom()
        if self.peek().kind == "sym" and self.peek().text == "^":
            self.advance()
            tok = self.peek()
            if tok.kind == "sym" and tok.text == "-":
                self.fail("negative exponents are not allowed; use recip()",
                          expected={"non-negative integer"})
            if tok.kind != "number" or not tok.text.isdigit():
                self.fail(f"found {tok.text!r}" if tok.kind != "eof" else "unexpected end of input",
                          expected={"non-negative integer"})
            self.advance()
            node = Pow(node, int(tok.text))
        return node

    def atom(self) -> Expr:
        tok = self.peek()
        if tok.kind == "name":
            if tok.text in ("z1", "z2"):
                self.advance()
                return Var(tok.text)
            if tok.text in ("conj", "recip"):
                self.advance()
                self.expect_sym("(")
                inner = self.expr()
                self.expect_sym(")")
                return Conj(inner) if tok.text == "conj" else Recip(inner)
            self.fail(f"unknown name {tok.text!r}", expected=_ATOM_EXPECTED)
        if tok.kind == "sym" and tok.text == "-":
            self.advance()
            return Neg(self.atom())
        if tok.kind == "number":
            self.advance()
            return Lit(complex(float(tok.text)), tok.text)
        if tok.kind == "sym" and tok.text == "(":
            pair = self.try_pair_literal()
            if pair is not None:
                return pair
            self.advance()
            inner = self.expr()
            self.expect_sym(")")
            return inner
        self.fail(f"found {tok.text!r}" if tok.kind != "eof" else "unexpected end of input",
                  expected=_ATOM_EXPECTED)

    def try_pair_literal(self) -> Lit | None:
        """Match "(" [-]decimal "," [-]decimal ")" without consuming on failure."""
        start = self.pos

        def signed_number():
            sign = ""
            tok = self.peek()
            if tok.kind == "sym" and tok.text == "-":
                self.advance()
                sign = "-"
                tok = self.peek()
            if tok.kind != "number":
                return None
            self.advance()
            return sign + tok.text

        self.advance()  # "("
        re_text = signed_number()
        if re_text is None or not (self.peek().kind == "sym" and self.peek().text == ","):
            self.pos = start
            return None
        self.advance()  # ","
        im_text = signed_number()
        if im_text is None or not (self.peek().kind == "sym" and self.peek().text == ")"):
            self.pos = start
            return None
        self.advance()  # ")"
        return Lit(complex(float(re_text), float(im_text)), f"({re_text}, {im_text})")


def parse_expr(text: str) -> Expr:
    parser = _Parser(text)
    node = parser.expr()
    if parser.peek().kind != "eof":
        parser.fail(f"trailing input {parser.peek().text!r}", expected={"end of input"})
    return node


def parse_program(text: str) -> tuple[Expr, Expr]:
    return _Parser(text).program()


# ---------------------------------------------------------------------------
# Printer

_LEVEL_ADD, _LEVEL_MUL, _LEVEL_POW, _LEVEL_ATOM = 1, 2, 3, 4


def _format_number(x: float) -> str:
    if x == int(x) and abs(x) < 1e16:
        return str(int(x))
    return repr(x)


def _lit_source(node: Lit) -> str:
    if node.text is not None:
        return node.text
    v = node.value
    if v.imag == 0:
        if v.real < 0:
            return f"({_format_number(v.real)}, 0)"
        return _format_number(v.real)
    return f"({_format_number(v.real)}, {_format_number(v.imag)})"


def _source(node: Expr, level: int) -> str:
    if isinstance(node, Var):
        out, mine = node.name, _LEVEL_ATOM
    elif isinstance(node, Lit):
        out, mine = _lit_source(node), _LEVEL_ATOM
    elif isinstance(node, Conj):
        out, mine = f"conj({_source(node.arg, _LEVEL_ADD)})", _LEVEL_ATOM
    elif isinstance(node, Recip):
        out, mine = f"recip({_source(node.arg, _LEVEL_ADD)})", _LEVEL_ATOM
    elif isinstance(node, Neg):
        out, mine = f"-{_source(node.arg, _LEVEL_ATOM)}", _LEVEL_ATOM
    elif isinstance(node, Pow):
        out, mine = f"{_source(node.base, _LEVEL_ATOM)}^{node.exponent}", _LEVEL_POW
    elif isinstance(node, Mul):
        out = f"{_source(node.left, _LEVEL_MUL)} * {_source(node.right, _LEVEL_POW)}"
        mine = _LEVEL_MUL
    elif isinstance(node, Add):
        left = _source(node.left, _LEVEL_ADD)
        if isinstance(node.right, Neg):
            out = f"{left} - {_source(node.right.arg, _LEVEL_MUL)}"
        else:
            out = f"{left} + {_source(node.right, _LEVEL_MUL)}"
        mine = _LEVEL_ADD
    else:
        raise TypeError(f"not an expression node: {node!r}")
    if mine < level:
        return f"({out})"
    return out


def to_source(expr: Expr) -> str:
    return _source(expr, _LEVEL_ADD)


def program_source(f1: Expr, f2: Expr) -> str:
    return f"f1 = {to_source(f1)}; f2 = {to_source(f2)}"
