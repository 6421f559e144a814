"""A small expression language for real cyclotomic constants.

Grammar (whitespace insensitive, ``^`` binds tightest)::

    expr   := term (("+" | "-") term)*
    term   := unary (("*" | "/") unary)*
    unary  := ("+" | "-") unary | power
    power  := atom ("^" ["-" | "+"] INT)?
    atom   := INT | "z(" INT ")" | "cos(pi" ["*" INT] "/" INT ")"
            | "sqrt(" ("2" | "5") ")" | "(" expr ")"

``z(N)`` is the fixed primitive N-th root of unity exp(2 pi i/N) and
``cos(pi*k/m)`` means ``(z(2m)^k + z(2m)^-k)/2``.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Union

from rootlat.cyclo import CycElem, zeta
from rootlat.errors import ParseError

_TOKEN = re.compile(r"\s*(?:(\d+)|(z|cos|sqrt|pi)|(\S))")


@dataclass(frozen=True)
class Num:
    value: int


@dataclass(frozen=True)
class Zeta:
    n: int


@dataclass(frozen=True)
class Cos:
    k: int
    m: int


@dataclass(frozen=True)
class Sqrt:
    n: int


@dataclass(frozen=True)
class Neg:
    arg: "Expr"


@dataclass(frozen=True)
class Pos:
    arg: "Expr"


@dataclass(frozen=True)
class BinOp:
    op: str
    left: "Expr"
    right: "Expr"


@dataclass(frozen=True)
class Pow:
    base: "Expr"
    exp: int


Expr = Union[Num, Zeta, Cos, Sqrt, Neg, Pos, BinOp, Pow]


def _tokenize(text: str) -> list[tuple[str, str, int]]:
    out = []
    pos = 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if m is None:
            break  # trailing whitespace
        start = m.start(m.lastindex)
        if m.group(1):
            out.append(("int", m.group(1), start))
        elif m.group(2):
            out.append(("name", m.group(2), start))
        else:
            out.append(("op", m.group(3), start))
        pos = m.end()
    out.append(("end", "", len(text)))
    return out


class _Parser:
    def __init__(self, text: str):
        self.toks = _tokenize(text)
        self.i = 0

    def peek(self) -> tuple[str, str, int]:
        return self.toks[self.i]

    def take(self, kind: str, value: str | None = None) -> str:
        k, v, pos = self.peek()
        if k != kind or (value is not None and v != value):
            want = value if value is not None else kind
            got = v if k != "end" else "end of input"
            raise ParseError(f"expected {want!r}, got {got!r}", pos)
        self.i += 1
        return v

    def accept(self, kind: str, value: str) -> bool:
        k, v, _ = self.peek()
        if k == kind and v == value:
            self.i += 1
            return True
        return False

    def expr(self) -> Expr:
        node = self.term()
        while True:
            k, v, _ = self.peek()
            if k == "op" and v in "+-":
                self.i += 1
                node = BinOp(v, node, self.term())
            else:
                return node

    def term(self) -> Expr:
        node = self.unary()
        while True:
            k, v, _ = self.peek()
            if k == "op" and v in "*/":
                self.i += 1
                node = BinOp(v, node, self.unary())
            else:
                return node

    def unary(self) -> Expr:
        if self.accept("op", "-"):
            return Neg(self.unary())
        if self.accept("op", "+"):
            return Pos(self.unary())
        return self.power()

    def power(self) -> Expr:
        base = self.atom()
        if self.accept("op", "^"):
            sgn = -1 if self.accept("op", "-") else 1
            if sgn == 1:
                self.accept("op", "+")
            return Pow(base, sgn * int(self.take("int")))
        return base

    def positive_int(self) -> int:
        pos = self.peek()[2]
        value = int(self.take("int"))
        if value < 1:
            raise ParseError("expected a positive integer", pos)
        return value

    def atom(self) -> Expr:
        k, v, pos = self.peek()
        if k == "int":
            self.i += 1
            return Num(int(v))
        if k == "op" and v == "(":
            self.i += 1
            node = self.expr()
            self.take("op", ")")
            return node
        if k == "name" and v == "z":
            self.i += 1
            self.take("op", "(")
            n = self.positive_int()
            self.take("op", ")")
            return Zeta(n)
        if k == "name" and v == "sqrt":
            self.i += 1
            self.take("op", "(")
            arg_pos = self.peek()[2]
            n = int(self.take("int"))
            if n not in (2, 5):
                raise ParseError("only sqrt(2) and sqrt(5) are supported", arg_pos)
            self.take("op", ")")
            return Sqrt(n)
        if k == "name" and v == "cos":
            self.i += 1
            self.take("op", "(")
            self.take("name", "pi")
            num = 1
            if self.accept("op", "*"):
                sgn = -1 if self.accept("op", "-") else 1
                num = sgn * int(self.take("int"))
            self.take("op", "/")
            m = self.positive_int()
            self.take("op", ")")
            return Cos(num, m)
        raise ParseError(f"unexpected {v!r}" if k != "end" else "unexpected end of input", pos)


def parse_cyc_expr(text: str) -> Expr:
    p = _Parser(text)
    node = p.expr()
    k, v, pos = p.peek()
    if k != "end":
        raise ParseError(f"unexpected {v!r}", pos)
    return node


_PREC = {"+": 1, "-": 1, "*": 2, "/": 2}


def to_string(node: Expr) -> str:
    """Print with the minimal parentheses needed to parse back to ``node``."""
    return _show(node, 0)


def _show(node: Expr, ctx: int) -> str:
    # ctx: binding power required by the surrounding context
    if isinstance(node, Num):
        return str(node.value)
    if isinstance(node, Zeta):
        return f"z({node.n})"
    if isinstance(node, Sqrt):
        return f"sqrt({node.n})"
    if isinstance(node, Cos):
        return f"cos(pi/{node.m})" if node.k == 1 else f"cos(pi*{node.k}/{node.m})"
    if isinstance(node, Pow):
        s = f"{_show(node.base, 4)}^{node.exp}"
        return f"({s})" if ctx >= 4 else s
    if isinstance(node, (Neg, Pos)):
        s = ("-" if isinstance(node, Neg) else "+") + _show(node.arg, 3)
        return f"({s})" if ctx > 3 else s
    prec = _PREC[node.op]
    s = f"{_show(node.left, prec)} {node.op} {_show(node.right, prec + 1)}"
    return f"({s})" if prec < ctx else s


def evaluate(node: Expr) -> CycElem:
    if isinstance(node, Num):
        return CycElem.rational(node.value)
    if isinstance(node, Zeta):
        return zeta(node.n)
    if isinstance(node, Sqrt):
        if node.n == 2:
            return zeta(8) + zeta(8, -1)
        return 1 + 2 * (zeta(5) + zeta(5, 4))
    if isinstance(node, Cos):
        m2 = 2 * node.m
        return (zeta(m2, node.k) + zeta(m2, -node.k)) / 2
    if isinstance(node, Neg):
        return -evaluate(node.arg)
    if isinstance(node, Pos):
        return evaluate(node.arg)
    if isinstance(node, Pow):
        return evaluate(node.base) ** node.exp
    a, b = evaluate(node.left), evaluate(node.right)
    return {"+": a.__add__, "-": a.__sub__, "*": a.__mul__, "/": a.__truediv__}[node.op](b)


def parse_value(text: str) -> CycElem:
    return evaluate(parse_cyc_expr(text))
