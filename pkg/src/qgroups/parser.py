"""Surface-syntax parser for algebra expressions.

Scalars commute, generators do not; ``(x)`` separates tensor slots.  The
pretty-printed normal forms produced by the engine parse back to the same
canonical objects.
"""

from __future__ import annotations

import re
from fractions import Fraction
from typing import Optional, Union

from . import qseries as qs
from . import scalars as sc
from .errors import ParseError, UnknownGenerator
from .ncalg import NCPolynomial, RewriteSystem
from .tensor import TensorElement

_TOKEN = re.compile(
    r"\s*(?:(?P<tensor>\(x\))"
    r"|(?P<int>\d+)"
    r"|(?P<name>[A-Za-z_][A-Za-z0-9_]*)"
    r"|(?P<op>[-+*/^()]))")

_RHO = re.compile(r"rho(\d+)$")
_SQRT = re.compile(r"sqrt(\d+)$")

Value = Union[NCPolynomial, TensorElement]


class _Tokens:
    def __init__(self, text: str):
        self.text = text
        self.items: list = []
        pos = 0
        while pos < len(text):
            m = _TOKEN.match(text, pos)
            if m is None or m.end() == pos:
                if text[pos:].strip():
                    raise ParseError(
                        f"unexpected character {text[pos]!r}", pos)
                break
            pos = m.end()
            kind = m.lastgroup
            self.items.append((kind, m.group(kind), m.start(kind)))
        self.i = 0

    def peek(self) -> Optional[tuple]:
        return self.items[self.i] if self.i < len(self.items) else None

    def next(self) -> tuple:
        tok = self.peek()
        if tok is None:
            raise ParseError("unexpected end of input", len(self.text))
        self.i += 1
        return tok

    def accept(self, kind: str, value: Optional[str] = None) -> Optional[tuple]:
        tok = self.peek()
        if tok and tok[0] == kind and (value is None or tok[1] == value):
            self.i += 1
            return tok
        return None

    def expect_op(self, value: str) -> None:
        tok = self.peek()
        if not (tok and tok[0] == "op" and tok[1] == value):
            where = tok[2] if tok else len(self.text)
            raise ParseError(f"expected {value!r}", where)
        self.i += 1


class ExpressionParser:
    """Parses expressions over a rewrite system's alphabet plus scalar atoms
    (integers, rationals via /, the field variable, rho<n> and sqrt<n>)."""

    def __init__(self, rs: RewriteSystem):
        self.rs = rs
        self.var = rs.var

    # -- scalar atom resolution -------------------------------------------------

    def _scalar_atom(self, name: str, pos: int) -> Optional[sc.FieldElement]:
        if name == "q":
            if self.var != "s":
                raise ParseError("q is not a scalar of this algebra", pos)
            return sc.q_power(1)
        if name == "s":
            if self.var != "s":
                raise ParseError("s is not a scalar of this algebra", pos)
            return sc.s_power(1)
        if name == "h":
            if self.var != "h":
                raise ParseError("h is not a scalar of this algebra", pos)
            return sc.FieldElement.var_power(1, "h")
        m = _RHO.match(name)
        if m:
            if self.var != "s":
                raise ParseError("rho symbols live in the q-side field", pos)
            n = int(m.group(1))
            sc.adjoin_radical(name, qs.q_number(n))
            return sc.FieldElement.radical(name, self.var)
        m = _SQRT.match(name)
        if m:
            return sc.sqrt_of_fraction(Fraction(int(m.group(1))), self.var)
        return None

    # -- grammar -------------------------------------------------------------------

    def parse(self, text: str) -> Value:
        toks = _Tokens(text)
        value = self._expr(toks)
        tok = toks.peek()
        if tok is not None:
            raise ParseError(f"trailing input at {tok[1]!r}", tok[2])
        return value

    def _expr(self, toks: _Tokens) -> Value:
        negate = False
        if toks.accept("op", "-"):
            negate = True
        value = self._tensor_term(toks)
        if negate:
            value = -value
        while True:
            if toks.accept("op", "+"):
                value = value + self._tensor_term(toks)
            elif toks.accept("op", "-"):
                value = value - self._tensor_term(toks)
            else:
                return value

    def _tensor_term(self, toks: _Tokens) -> Value:
        first = self._mul_term(toks)
        factors = [first]
        while toks.accept("tensor"):
            factors.append(self._mul_term(toks))
        if len(factors) == 1:
            return first
        polys = []
        for f in factors:
            if isinstance(f, TensorElement):
                raise ParseError("nested tensor separators are not supported",
                                 toks.i)
            polys.append(f)
        systems = tuple(self.rs for _ in polys)
        return TensorElement.pure(systems, *polys)

    def _mul_term(self, toks: _Tokens) -> Value:
        value = self._power(toks)
        while True:
            if toks.accept("op", "*"):
                value = value * self._power(toks)
            elif toks.accept("op", "/"):
                divisor = self._power(toks)
                value = self._divide(value, divisor, toks)
            else:
                return value

    def _divide(self, value: Value, divisor: Value, toks: _Tokens) -> Value:
        if isinstance(divisor, TensorElement) or not divisor.is_scalar():
            raise ParseError("can only divide by scalar expressions", toks.i)
        inv = divisor.constant_part().inverse()
        if isinstance(value, TensorElement):
            return value.scale(inv)
        return value.scale(inv)

    def _power(self, toks: _Tokens) -> Value:
        base = self._atom(toks)
        if not toks.accept("op", "^"):
            return base
        sign = -1 if toks.accept("op", "-") else 1
        tok = toks.peek()
        if not (tok and tok[0] == "int"):
            where = tok[2] if tok else len(toks.text)
            raise ParseError("expected an integer exponent", where)
        toks.next()
        k = sign * int(tok[1])
        if k >= 0:
            return base ** k
        if isinstance(base, TensorElement) or not base.is_scalar():
            raise ParseError(
                "negative exponents apply to scalars only", tok[2])
        return NCPolynomial.scalar(base.constant_part() ** k)

    def _atom(self, toks: _Tokens) -> Value:
        tok = toks.next()
        kind, text, pos = tok
        if kind == "int":
            return NCPolynomial.scalar(sc.const(int(text), self.var))
        if kind == "op" and text == "(":
            value = self._expr(toks)
            toks.expect_op(")")
            return value
        if kind == "name":
            if text in self.rs.index:
                return NCPolynomial.gen(text, self.var)
            scalar = self._scalar_atom(text, pos)
            if scalar is not None:
                return NCPolynomial.scalar(scalar)
            raise UnknownGenerator(
                f"unknown generator or scalar {text!r} at position {pos}")
        raise ParseError(f"unexpected token {text!r}", pos)


def parse_expression(text: str, rs: RewriteSystem) -> Value:
    return ExpressionParser(rs).parse(text)
