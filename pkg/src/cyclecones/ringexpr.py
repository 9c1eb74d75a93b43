"""Tiny expression language for ring elements on the command line.

Grammar: sums/differences of products of powers over named classes,
generators, rational literals, and parentheses, e.g. ``(D1+3*D2)^2`` or
``2/231*(D1+3*D2)^2 + 15/11*S2``.  Values are exact scalars, ring
elements, or dual classes; mixed products follow the ring's rules.
"""

from __future__ import annotations

import re
from fractions import Fraction

from .errors import InputError
from .rationals import rat
from .rings import DualClass, RingElement, RingPresentation

_TOKEN = re.compile(r"\s*(\d+/\d+|\d+|[A-Za-z_][A-Za-z_0-9]*|[()+*^-])")


def tokenize(text: str) -> list[str]:
    tokens = []
    pos = 0
    while pos < len(text):
        match = _TOKEN.match(text, pos)
        if match is None:
            raise InputError(f"bad expression near {text[pos:pos + 10]!r}")
        tokens.append(match.group(1))
        pos = match.end()
    return tokens


class _Parser:
    def __init__(self, tokens, names, ring: RingPresentation):
        self.tokens = tokens
        self.pos = 0
        self.names = names
        self.ring = ring

    def peek(self):
        return self.tokens[self.pos] if self.pos < len(self.tokens) else None

    def take(self):
        token = self.peek()
        self.pos += 1
        return token

    def parse(self):
        value = self.expr()
        if self.peek() is not None:
            raise InputError(f"unexpected token {self.peek()!r}")
        return value

    def expr(self):
        value = self.term()
        while self.peek() in ("+", "-"):
            op = self.take()
            rhs = self.term()
            value = _add(value, rhs) if op == "+" else _add(value, _scale(rhs, -1))
        return value

    def term(self):
        value = self.factor()
        while self.peek() == "*" or (
            self.peek() not in (None, "+", "-", ")", "^", "*")
        ):
            if self.peek() == "*":
                self.take()
            value = _mul(value, self.factor(), self.ring)
        return value

    def factor(self):
        value = self.atom()
        while self.peek() == "^":
            self.take()
            power_token = self.take()
            if power_token is None or not power_token.isdigit():
                raise InputError("exponent must be a nonnegative integer")
            power = int(power_token)
            base = value
            value = Fraction(1) if isinstance(base, Fraction) else self.ring.one()
            for _ in range(power):
                value = _mul(value, base, self.ring)
        return value

    def atom(self):
        token = self.take()
        if token is None:
            raise InputError("unexpected end of expression")
        if token == "(":
            value = self.expr()
            if self.take() != ")":
                raise InputError("missing closing parenthesis")
            return value
        if token == "-":
            return _scale(self.atom(), -1)
        if re.fullmatch(r"\d+/\d+|\d+", token):
            return rat(token)
        if token in self.names:
            return self.names[token]
        raise InputError(f"unknown name {token!r}")


def _scale(value, factor):
    factor = rat(factor)
    if isinstance(value, Fraction):
        return value * factor
    return value.scale(factor)


def _add(a, b):
    if isinstance(a, Fraction) and isinstance(b, Fraction):
        return a + b
    if isinstance(a, Fraction) or isinstance(b, Fraction):
        raise InputError("cannot add a scalar to a class")
    return a + b


def _mul(a, b, ring):
    if isinstance(a, Fraction):
        return _scale(b, a) if not isinstance(b, Fraction) else a * b
    if isinstance(b, Fraction):
        return _scale(a, b)
    if isinstance(a, RingElement) and isinstance(b, RingElement):
        return ring.multiply(a, b)
    raise InputError("cannot multiply these operands")


def evaluate(text: str, ring: RingPresentation, names: dict) -> object:
    """Evaluate ``text`` to a Fraction, RingElement, or DualClass."""
    full_names = dict(names)
    for generator in ring.generators:
        full_names.setdefault(generator, ring.generator(generator))
    return _Parser(tokenize(text), full_names, ring).parse()
