"""A small expression language for generating functions in ``t``.

Grammar (EBNF)::

    expr     = term { ("+" | "-") term } ;
    term     = unary { ("*" | "/") unary } ;
    unary    = "-" unary | power ;
    power    = atom [ "^" exponent ] ;
    exponent = [ "-" ] INT | "(" [ "-" ] INT [ "/" INT ] ")" ;
    atom     = INT | "t" | NAME | "(" expr ")"
             | "sqrt" "(" expr ")" | "compose" "(" expr "," expr ")" ;

``^`` binds tighter than unary minus, which binds tighter than ``*`` and
``/``.  ``NAME`` is a catalog series such as ``catalan``,
``central-binomial``, ``ternary`` or ``fuss:3``.  Subexpressions free of
``t`` are folded to exact rationals before any series work, so ``1/2*t`` is
``t/2``.  Dividing by a series with zero constant term divides out the
common power of ``t`` when the numerator allows it.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Union

from . import catalog
from .errors import NotDivisibleByT, SeriesError
from .series import PowerSeries, compose, div, pow_int, pow_rational, shift


class GfSyntaxError(ValueError):
    def __init__(self, message: str, offset: int, expected: tuple[str, ...] = ()):
        self.offset = offset
        self.expected = expected
        detail = f" (expected {' or '.join(expected)})" if expected else ""
        super().__init__(f"{message} at byte {offset}{detail}")


class GfSemanticError(ValueError):
    def __init__(self, constraint: str, subexpr: str, message: str = ""):
        self.constraint = constraint
        self.subexpr = subexpr
        super().__init__(f"{constraint} in {subexpr}" + (f": {message}" if message else ""))


# -- AST ------------------------------------------------------------------------

@dataclass(frozen=True)
class Num:
    value: int


@dataclass(frozen=True)
class Var:
    pass


@dataclass(frozen=True)
class Name:
    ident: str


@dataclass(frozen=True)
class Neg:
    arg: "Node"


@dataclass(frozen=True)
class BinOp:
    op: str  # one of + - * /
    left: "Node"
    right: "Node"


@dataclass(frozen=True)
class Pow:
    base: "Node"
    exponent: Fraction


@dataclass(frozen=True)
class Sqrt:
    arg: "Node"


@dataclass(frozen=True)
class Compose:
    outer: "Node"
    inner: "Node"


Node = Union[Num, Var, Name, Neg, BinOp, Pow, Sqrt, Compose]


def render(node: Node) -> str:
    """Canonical text; ``parse(render(x)) == x`` for every parsed tree."""
    if isinstance(node, Num):
        return str(node.value)
    if isinstance(node, Var):
        return "t"
    if isinstance(node, Name):
        return node.ident
    if isinstance(node, Neg):
        return f"(-{render(node.arg)})"
    if isinstance(node, BinOp):
        return f"({render(node.left)} {node.op} {render(node.right)})"
    if isinstance(node, Pow):
        e = node.exponent
        exp = str(e) if e.denominator == 1 and e >= 0 else f"({e})"
        return f"({render(node.base)}^{exp})"
    if isinstance(node, Sqrt):
        return f"sqrt({render(node.arg)})"
    if isinstance(node, Compose):
        return f"compose({render(node.outer)}, {render(node.inner)})"
    raise TypeError(node)


# -- lexer ----------------------------------------------------------------------

_LONG_NAME = re.compile(r"[A-Za-z_][A-Za-z0-9_]*(?:-[A-Za-z_][A-Za-z0-9_]*)*(?::\d+)?")
_SHORT_NAME = re.compile(r"[A-Za-z_][A-Za-z0-9_]*")
_INT = re.compile(r"\d+")
_KEYWORDS = ("t", "sqrt", "compose")


def _is_catalog_name(word: str) -> bool:
    try:
        catalog.catalog_entry(word)
    except KeyError:
        return False
    return True


@dataclass(frozen=True)
class _Tok:
    kind: str  # INT NAME KW OP END
    text: str
    pos: int  # byte offset


def _tokenize(src: str) -> list[_Tok]:
    toks = []
    i = 0
    boff = 0  # byte offset of src[i]
    while i < len(src):
        ch = src[i]
        if ch.isspace():
            boff += len(ch.encode())
            i += 1
            continue
        if ch.isdigit():
            text = _INT.match(src, i).group()
            toks.append(_Tok("INT", text, boff))
        elif ch.isalpha() or ch == "_":
            long = _LONG_NAME.match(src, i).group()
            if long not in _KEYWORDS and _is_catalog_name(long):
                text = long
                kind = "NAME"
            else:
                text = _SHORT_NAME.match(src, i).group()
                if text in _KEYWORDS:
                    kind = "KW"
                elif _is_catalog_name(text):
                    kind = "NAME"
                else:
                    raise GfSyntaxError(f"unknown identifier {text!r}", boff)
            toks.append(_Tok(kind, text, boff))
        elif ch in "+-*/^(),":
            text = ch
            toks.append(_Tok("OP", ch, boff))
        else:
            raise GfSyntaxError(f"unexpected character {ch!r}", boff)
        i += len(text)
        boff += len(text.encode())
    toks.append(_Tok("END", "", boff))
    return toks


# -- parser ---------------------------------------------------------------------

class _Parser:
    def __init__(self, src: str):
        self.toks = _tokenize(src)
        self.i = 0

    @property
    def tok(self) -> _Tok:
        return self.toks[self.i]

    def at(self, text: str) -> bool:
        return self.tok.kind in ("OP", "KW") and self.tok.text == text

    def expect(self, text: str) -> None:
        if not self.at(text):
            self.fail(f"'{text}'")
        self.i += 1

    def fail(self, *expected: str):
        got = self.tok.text or "end of input"
        raise GfSyntaxError(f"unexpected {got!r}", self.tok.pos, tuple(expected))

    def parse(self) -> Node:
        node = self.expr()
        if self.tok.kind != "END":
            self.fail("operator", "end of input")
        return node

    def expr(self) -> Node:
        node = self.term()
        while self.at("+") or self.at("-"):
            op = self.tok.text
            self.i += 1
            node = BinOp(op, node, self.term())
        return node

    def term(self) -> Node:
        node = self.unary()
        while self.at("*") or self.at("/"):
            op = self.tok.text
            self.i += 1
            node = BinOp(op, node, self.unary())
        return node

    def unary(self) -> Node:
        if self.at("-"):
            self.i += 1
            return Neg(self.unary())
        return self.power()

    def power(self) -> Node:
        base = self.atom()
        if self.at("^"):
            self.i += 1
            return Pow(base, self.exponent())
        return base

    def _int(self) -> int:
        if self.tok.kind != "INT":
            self.fail("integer")
        value = int(self.tok.text)
        self.i += 1
        return value

    def _signed_int(self) -> int:
        sign = 1
        if self.at("-"):
            self.i += 1
            sign = -1
        return sign * self._int()

    def exponent(self) -> Fraction:
        if self.at("("):
            self.i += 1
            value = Fraction(self._signed_int())
            if self.at("/"):
                self.i += 1
                pos = self.tok.pos
                den = self._int()
                if den == 0:
                    raise GfSyntaxError("zero denominator in exponent", pos)
                value /= den
            self.expect(")")
            return value
        if self.tok.kind != "INT" and not self.at("-"):
            self.fail("integer", "'-'", "'('")
        return Fraction(self._signed_int())

    def atom(self) -> Node:
        tok = self.tok
        if tok.kind == "INT":
            self.i += 1
            return Num(int(tok.text))
        if tok.kind == "NAME":
            self.i += 1
            return Name(tok.text)
        if self.at("t"):
            self.i += 1
            return Var()
        if self.at("sqrt"):
            self.i += 1
            self.expect("(")
            arg = self.expr()
            self.expect(")")
            return Sqrt(arg)
        if self.at("compose"):
            self.i += 1
            self.expect("(")
            outer = self.expr()
            self.expect(",")
            inner = self.expr()
            self.expect(")")
            return Compose(outer, inner)
        if self.at("("):
            self.i += 1
            node = self.expr()
            self.expect(")")
            return node
        self.fail("integer", "'t'", "name", "'('", "'sqrt'", "'compose'")


def parse(src: str) -> Node:
    return _Parser(src).parse()


# -- evaluation -----------------------------------------------------------------

Value = Union[Fraction, PowerSeries]


def _exact_root(x: Fraction, e: Fraction, node: Node) -> Fraction:
    # x^e for rational e, only when the result is rational
    if e.denominator == 1:
        if x == 0 and e < 0:
            raise GfSemanticError("ZeroDivision", render(node))
        return x ** int(e)
    if x < 0:
        raise GfSemanticError("NonRationalPower", render(node))
    q = e.denominator
    num = round(x.numerator ** (1 / q))
    den = round(x.denominator ** (1 / q))
    for a in (num - 1, num, num + 1):
        for b in (den - 1, den, den + 1):
            if a >= 0 and b > 0 and Fraction(a, b) ** q == x:
                return Fraction(a, b) ** e.numerator
    raise GfSemanticError("NonRationalPower", render(node), f"{x}^{e} is irrational")


def _series_divide(a: PowerSeries, b: PowerSeries, node: Node) -> PowerSeries:
    if b.coeffs[0] != 0:
        return div(a, b)
    v = b.valuation()
    if v > b.order:
        raise GfSemanticError("ZeroDivision", render(node), "divisor vanishes to working order")
    if any(a.coeffs[:v]):
        raise GfSemanticError("NotDivisibleByT", render(node),
                              f"numerator is not divisible by t^{v}")
    if v > a.order:
        raise GfSemanticError("NotDivisibleByT", render(node), "numerator too short")
    return div(shift(a, -v), shift(b, -v))


def _ev(node: Node, order: int) -> Value:
    try:
        return _ev_inner(node, order)
    except SeriesError as exc:
        raise GfSemanticError(type(exc).__name__, render(node), str(exc)) from exc


def _lift(x: Value, order: int) -> PowerSeries:
    return x if isinstance(x, PowerSeries) else PowerSeries.constant(x, order)


def _ev_inner(node: Node, order: int) -> Value:
    if isinstance(node, Num):
        return Fraction(node.value)
    if isinstance(node, Var):
        return PowerSeries.variable(order)
    if isinstance(node, Name):
        try:
            return catalog.series(node.ident, order)
        except KeyError as exc:
            raise GfSemanticError("NotASeries", node.ident, str(exc)) from exc
    if isinstance(node, Neg):
        return -_ev(node.arg, order)
    if isinstance(node, BinOp):
        a, b = _ev(node.left, order), _ev(node.right, order)
        if node.op == "+":
            return a + b
        if node.op == "-":
            return a - b
        if node.op == "*":
            return a * b
        if isinstance(b, Fraction):
            if b == 0:
                raise GfSemanticError("ZeroDivision", render(node))
            return a / b
        return _series_divide(_lift(a, order), b, node)
    if isinstance(node, (Pow, Sqrt)):
        base = _ev(node.base if isinstance(node, Pow) else node.arg, order)
        e = node.exponent if isinstance(node, Pow) else Fraction(1, 2)
        if isinstance(base, Fraction):
            return _exact_root(base, e, node)
        if e.denominator == 1:
            return pow_int(base, int(e))
        return pow_rational(base, e.numerator, e.denominator)
    if isinstance(node, Compose):
        outer = _lift(_ev(node.outer, order), order)
        inner = _lift(_ev(node.inner, order), order)
        return compose(outer, inner)
    raise TypeError(node)


def evaluate(node: Node, order: int) -> PowerSeries:
    """Series for ``node`` valid to exactly ``order``.

    Division by powers of ``t`` costs truncation order, so the tree is
    re-evaluated at a higher working order until the result covers ``order``.
    """
    work = order
    for _ in range(16):
        value = _ev(node, work)
        if isinstance(value, Fraction):
            return PowerSeries.constant(value, order)
        if value.order >= order:
            return value.truncate(order)
        work += order - value.order
    raise GfSemanticError("OrderExceeded", render(node), f"could not reach order {order}")


def series_from_text(src: str, order: int) -> PowerSeries:
    return evaluate(parse(src), order)


__all__ = [
    "GfSemanticError",
    "GfSyntaxError",
    "NotDivisibleByT",
    "evaluate",
    "parse",
    "render",
    "series_from_text",
]
