"""Text form of polynomials.

Grammar (ASCII, whitespace-insensitive)::

    poly   := ['-'] term (('+'|'-') term)*
    term   := coeff ('*' factor)* | factor ('*' factor)*
    factor := var ['^' uint]       var := 'x' uint   (1-based)
    coeff  := rat ('*' rad)* | rad rat := int ['/' uint]   rad := 's2'|'s3'|'s6'

A coefficient with several radical components is written as several terms
sharing one monomial, e.g. ``x1 + s2*x1``.
"""

from __future__ import annotations

import re
from fractions import Fraction
from typing import Optional

from .coefficient import Coefficient
from .polynomial import MAX_EXPONENT, MAX_VARS, Polynomial

_RAD = {"s2": Coefficient(0, 1), "s3": Coefficient(0, 0, 1), "s6": Coefficient(0, 0, 0, 1)}
_TOKEN = re.compile(r"\s*(?:(?P<var>x\d+)|(?P<rad>s[236])|(?P<int>\d+)|(?P<op>[-+*/^]))")


class PolySyntaxError(ValueError):
    """Malformed polynomial text; ``position`` is a 0-based character offset."""

    def __init__(self, message: str, position: int):
        self.position = position
        super().__init__(f"{message} at position {position}")


def _tokenize(text: str) -> list[tuple[str, str, int]]:
    tokens = []
    pos = 0
    end = len(text.rstrip())
    while pos < end:
        mt = _TOKEN.match(text, pos)
        if mt is None or mt.end() == pos:
            start = pos + (len(text[pos:]) - len(text[pos:].lstrip()))
            raise PolySyntaxError(f"unexpected character {text[start]!r}", start)
        kind = mt.lastgroup
        tokens.append((kind, mt.group(kind), mt.start(kind)))
        pos = mt.end()
    tokens.append(("end", "", len(text)))
    return tokens


class _Parser:
    def __init__(self, text: str, nvars: Optional[int]):
        self.tokens = _tokenize(text)
        self.i = 0
        self.nvars = nvars

    def peek(self):
        return self.tokens[self.i]

    def take(self):
        tok = self.tokens[self.i]
        self.i += 1
        return tok

    def expect_op(self, op: str):
        kind, val, pos = self.take()
        if kind != "op" or val != op:
            raise PolySyntaxError(f"expected {op!r}", pos)

    def uint(self) -> int:
        kind, val, pos = self.take()
        if kind != "int":
            raise PolySyntaxError("expected an unsigned integer", pos)
        return int(val)

    def poly(self) -> list[tuple[Coefficient, dict[int, int]]]:
        terms = []
        sign = 1
        kind, val, _ = self.peek()
        if kind == "op" and val == "-":
            self.take()
            sign = -1
        terms.append(self.term(sign))
        while True:
            kind, val, pos = self.peek()
            if kind == "end":
                return terms
            if kind == "op" and val in "+-":
                self.take()
                terms.append(self.term(1 if val == "+" else -1))
            else:
                raise PolySyntaxError(f"expected '+' or '-' but found {val!r}", pos)

    def term(self, sign: int) -> tuple[Coefficient, dict[int, int]]:
        coeff = Coefficient(sign)
        factors: dict[int, int] = {}
        kind, val, pos = self.peek()
        if kind == "int":
            coeff = coeff * self.rational()
            while self._next_is_star_then("rad"):
                self.take()
                coeff = coeff * _RAD[self.take()[1]]
        elif kind == "rad":
            self.take()
            coeff = coeff * _RAD[val]
        elif kind == "var":
            self.factor(factors)
        else:
            raise PolySyntaxError("expected a coefficient or a variable", pos)
        while self._next_is_star_then("var"):
            self.take()
            self.factor(factors)
        kind, val, pos = self.peek()
        if kind == "op" and val == "*":
            raise PolySyntaxError("expected a variable after '*'", self.tokens[self.i + 1][2])
        return coeff, factors

    def _next_is_star_then(self, kind: str) -> bool:
        k, v, _ = self.peek()
        return k == "op" and v == "*" and self.tokens[self.i + 1][0] == kind

    def rational(self) -> Fraction:
        num = self.uint()
        kind, val, _ = self.peek()
        if kind == "op" and val == "/":
            self.take()
            kind, val, pos = self.peek()
            den = self.uint()
            if den == 0:
                raise PolySyntaxError("zero denominator", pos)
            return Fraction(num, den)
        return Fraction(num)

    def factor(self, factors: dict[int, int]) -> None:
        kind, val, pos = self.take()
        index = int(val[1:])
        if index < 1 or index > MAX_VARS or (self.nvars is not None and index > self.nvars):
            raise PolySyntaxError(f"unknown variable {val}", pos)
        if index in factors:
            raise PolySyntaxError(f"repeated factor {val}; use '^'", pos)
        exp = 1
        k, v, _ = self.peek()
        if k == "op" and v == "^":
            self.take()
            _, _, epos = self.peek()
            exp = self.uint()
            if exp > MAX_EXPONENT:
                raise PolySyntaxError(f"exponent overflow ({exp} > {MAX_EXPONENT})", epos)
        factors[index] = exp


def parse_poly(text: str, nvars: Optional[int] = None) -> Polynomial:
    """Parse ``text``; ``nvars`` defaults to the largest variable index used."""
    raw = _Parser(text, nvars).poly()
    if nvars is None:
        nvars = max((i for _, fs in raw for i in fs), default=0)
    acc: dict[tuple[int, ...], Coefficient] = {}
    for coeff, fs in raw:
        exps = [0] * nvars
        for i, e in fs.items():
            exps[i - 1] = e
        key = tuple(exps)
        acc[key] = acc.get(key, Coefficient(0)) + coeff
    return Polynomial(nvars, acc)


def parse_coefficient(text: str) -> Coefficient:
    """Parse a constant such as ``-3/2*s3`` or ``1 + s2``."""
    p = parse_poly(text, 0)
    return p.constant_term()


def _monomial_text(exps) -> str:
    parts = []
    for i, e in enumerate(exps, start=1):
        if e == 1:
            parts.append(f"x{i}")
        elif e:
            parts.append(f"x{i}^{e}")
    return "*".join(parts)


def format_poly(f: Polynomial) -> str:
    """Canonical text: grevlex-descending terms, one term per radical component."""
    pieces: list[tuple[bool, str]] = []
    for exps, coeff in f.terms():
        mono = _monomial_text(exps)
        for value, rad in zip(coeff.parts, ("", "s2", "s3", "s6")):
            if not value:
                continue
            mag = abs(value)
            factors = []
            if mag != 1 or not (rad or mono):
                factors.append(str(mag))
            if rad:
                factors.append(rad)
            if mono:
                factors.append(mono)
            pieces.append((value < 0, "*".join(factors)))
    if not pieces:
        return "0"
    neg, body = pieces[0]
    out = ("-" if neg else "") + body
    for neg, body in pieces[1:]:
        out += (" - " if neg else " + ") + body
    return out
