"""Exact arithmetic in the rational function field Q(s) with adjoined square roots.

The base variable is ``s`` with ``q = s**2``, so every half-integer power of q
that shows up downstream is an honest Laurent monomial.  The deformed-by-h
structures reuse the same machinery with variable name ``h`` and no radicals.

A :class:`FieldElement` is a finite sum of terms

    (rational function in the variable) * (product of distinct radical symbols)

where each radical symbol carries a defining square; the square of a symbol
reduces immediately, so radical monomials stay square-free.  All operations
return canonical forms and equality of canonical forms is mathematical
equality.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd as int_gcd
from typing import Iterable, Optional

from .errors import (
    ConflictingDefinition,
    DivisionByZero,
    IrrationalRadicalLimit,
    PoleAtOne,
    UnsupportedRadicalInverse,
)


# ---------------------------------------------------------------------------
# Integer-coefficient univariate polynomials
# ---------------------------------------------------------------------------

class Poly:
    """Dense univariate polynomial with int coefficients, ascending degree."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[int]):
        cs = list(coeffs)
        while cs and cs[-1] == 0:
            cs.pop()
        self.coeffs = tuple(cs)

    @staticmethod
    def const(n: int) -> "Poly":
        return Poly((n,))

    @staticmethod
    def monomial(coeff: int, degree: int) -> "Poly":
        if coeff == 0:
            return Poly(())
        return Poly((0,) * degree + (coeff,))

    def is_zero(self) -> bool:
        return not self.coeffs

    def degree(self) -> int:
        return len(self.coeffs) - 1 if self.coeffs else -1

    def leading(self) -> int:
        return self.coeffs[-1] if self.coeffs else 0

    def is_monomial(self) -> bool:
        return bool(self.coeffs) and all(c == 0 for c in self.coeffs[:-1])

    def content(self) -> int:
        g = 0
        for c in self.coeffs:
            g = int_gcd(g, abs(c))
        return g

    def __eq__(self, other) -> bool:
        return isinstance(other, Poly) and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __neg__(self) -> "Poly":
        return Poly(tuple(-c for c in self.coeffs))

    def __add__(self, other: "Poly") -> "Poly":
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return Poly(out)

    def __sub__(self, other: "Poly") -> "Poly":
        return self + (-other)

    def __mul__(self, other: "Poly") -> "Poly":
        if self.is_zero() or other.is_zero():
            return Poly(())
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a == 0:
                continue
            for j, b in enumerate(other.coeffs):
                out[i + j] += a * b
        return Poly(out)

    def scale(self, n: int) -> "Poly":
        return Poly(tuple(n * c for c in self.coeffs))

    def exact_div(self, other: "Poly") -> "Poly":
        """Divide assuming exact divisibility over Z[s]."""
        if other.is_zero():
            raise DivisionByZero("polynomial division by zero")
        rem = [Fraction(c) for c in self.coeffs]
        dend = len(rem) - 1
        dsor = other.degree()
        lead = Fraction(other.leading())
        out: list[Fraction] = [Fraction(0)] * max(dend - dsor + 1, 0)
        for k in range(dend - dsor, -1, -1):
            f = rem[k + dsor] / lead
            out[k] = f
            if f:
                for j, c in enumerate(other.coeffs):
                    rem[k + j] -= f * c
        if any(rem) or any(f.denominator != 1 for f in out):
            raise ArithmeticError("inexact polynomial division")
        return Poly(tuple(int(f) for f in out))

    def primitive(self) -> "Poly":
        c = self.content()
        if c in (0, 1):
            return self
        return Poly(tuple(x // c for x in self.coeffs))

    def eval(self, point: Fraction) -> Fraction:
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * point + c
        return acc

    def reversed_coeffs(self) -> "Poly":
        return Poly(tuple(reversed(self.coeffs)))

    def __repr__(self) -> str:
        return f"Poly({self.coeffs})"


def _pseudo_rem(a: Poly, b: Poly) -> Poly:
    """Pseudo-remainder of a by b (both nonzero, deg a >= deg b)."""
    d = a.degree() - b.degree()
    lead = b.leading()
    rem = a
    for _ in range(d + 1):
        if rem.is_zero() or rem.degree() < b.degree():
            break
        shift = rem.degree() - b.degree()
        rem = rem.scale(lead) - b * Poly.monomial(rem.leading(), shift)
    return rem


def poly_gcd(a: Poly, b: Poly) -> Poly:
    """GCD in Z[s], positive leading coefficient."""
    if a.is_zero() and b.is_zero():
        return Poly(())
    if a.is_zero():
        g = b
        return g if g.leading() > 0 else -g
    if b.is_zero():
        g = a
        return g if g.leading() > 0 else -g
    cont = int_gcd(a.content(), b.content())
    pa, pb = a.primitive(), b.primitive()
    if pa.degree() < pb.degree():
        pa, pb = pb, pa
    while not pb.is_zero():
        rem = _pseudo_rem(pa, pb).primitive()
        pa, pb = pb, rem
    g = pa.primitive().scale(cont)
    return g if g.leading() > 0 else -g


_POLY_ONE = Poly((1,))


# ---------------------------------------------------------------------------
# Rational functions
# ---------------------------------------------------------------------------

class RatFunc:
    """Quotient of two integer polynomials in canonical form.

    Canonical: gcd(num, den) = 1 over Z[s] (content included) and the leading
    denominator coefficient is positive.
    """

    __slots__ = ("num", "den")

    def __init__(self, num: Poly, den: Poly = _POLY_ONE):
        if den.is_zero():
            raise DivisionByZero("zero denominator")
        if num.is_zero():
            self.num, self.den = Poly(()), _POLY_ONE
            return
        g = poly_gcd(num, den)
        if g.coeffs != (1,):
            num = num.exact_div(g)
            den = den.exact_div(g)
        if den.leading() < 0:
            num, den = -num, -den
        self.num, self.den = num, den

    @staticmethod
    def const(value) -> "RatFunc":
        fr = Fraction(value)
        return RatFunc(Poly.const(fr.numerator), Poly.const(fr.denominator))

    @staticmethod
    def var_power(k: int) -> "RatFunc":
        if k >= 0:
            return RatFunc(Poly.monomial(1, k))
        return RatFunc(_POLY_ONE, Poly.monomial(1, -k))

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, RatFunc)
            and self.num == other.num
            and self.den == other.den
        )

    def __hash__(self) -> int:
        return hash((self.num, self.den))

    def __neg__(self) -> "RatFunc":
        return RatFunc(-self.num, self.den)

    def __add__(self, other: "RatFunc") -> "RatFunc":
        return RatFunc(self.num * other.den + other.num * self.den,
                       self.den * other.den)

    def __sub__(self, other: "RatFunc") -> "RatFunc":
        return self + (-other)

    def __mul__(self, other: "RatFunc") -> "RatFunc":
        return RatFunc(self.num * other.num, self.den * other.den)

    def __truediv__(self, other: "RatFunc") -> "RatFunc":
        if other.is_zero():
            raise DivisionByZero("division by zero rational function")
        return RatFunc(self.num * other.den, self.den * other.num)

    def inverse(self) -> "RatFunc":
        if self.is_zero():
            raise DivisionByZero("inverting zero")
        return RatFunc(self.den, self.num)

    def laurent(self) -> Optional[dict[int, Fraction]]:
        """Exponent -> coefficient map if the denominator is a monomial."""
        if self.is_zero():
            return {}
        if not self.den.is_monomial():
            return None
        shift = self.den.degree()
        lead = self.den.leading()
        return {
            i - shift: Fraction(c, lead)
            for i, c in enumerate(self.num.coeffs)
            if c != 0
        }

    def eval(self, point: Fraction) -> Fraction:
        d = self.den.eval(point)
        if d == 0:
            raise PoleAtOne(f"pole at {point}")
        return self.num.eval(point) / d

    def subs_inverse_var(self) -> "RatFunc":
        """Substitute the variable by its reciprocal."""
        dn, dd = self.num.degree(), self.den.degree()
        num = self.num.reversed_coeffs()
        den = self.den.reversed_coeffs()
        if dd > dn:
            num = num * Poly.monomial(1, dd - dn)
        elif dn > dd:
            den = den * Poly.monomial(1, dn - dd)
        return RatFunc(num, den)

    def __repr__(self) -> str:
        return f"RatFunc({self.num!r}, {self.den!r})"


_RF_ZERO = RatFunc(Poly(()))
_RF_ONE = RatFunc(_POLY_ONE)


# ---------------------------------------------------------------------------
# Radical registry
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class RadicalSymbol:
    name: str
    square: "FieldElement"


# Append-only; concurrent reads are safe (single atomic dict assignment per add).
_RADICALS: dict[str, "FieldElement"] = {}


def adjoin_radical(name: str, square: "FieldElement") -> RadicalSymbol:
    """Register a formal square root of ``square``; idempotent per (name, square)."""
    if square.is_zero():
        raise ConflictingDefinition("radical square must be nonzero")
    if square.radical_names():
        raise ConflictingDefinition("radical square must be radical-free")
    known = _RADICALS.get(name)
    if known is not None:
        if known != square:
            raise ConflictingDefinition(
                f"radical {name!r} already defined with a different square")
        return RadicalSymbol(name, known)
    _RADICALS[name] = square
    return RadicalSymbol(name, square)


def radical_square(name: str) -> "FieldElement":
    return _RADICALS[name]


# ---------------------------------------------------------------------------
# Field elements
# ---------------------------------------------------------------------------

class FieldElement:
    """Element of Q(var) extended by the registered radical symbols."""

    __slots__ = ("var", "terms")

    def __init__(self, terms: dict[frozenset, RatFunc], var: str = "s"):
        self.var = var
        self.terms = {k: v for k, v in terms.items() if not v.is_zero()}

    # -- constructors -------------------------------------------------------

    @staticmethod
    def zero(var: str = "s") -> "FieldElement":
        return FieldElement({}, var)

    @staticmethod
    def one(var: str = "s") -> "FieldElement":
        return FieldElement({frozenset(): _RF_ONE}, var)

    @staticmethod
    def const(value, var: str = "s") -> "FieldElement":
        return FieldElement({frozenset(): RatFunc.const(value)}, var)

    @staticmethod
    def var_power(k: int, var: str = "s") -> "FieldElement":
        return FieldElement({frozenset(): RatFunc.var_power(k)}, var)

    @staticmethod
    def radical(name: str, var: str = "s") -> "FieldElement":
        if name not in _RADICALS:
            raise KeyError(f"unregistered radical {name!r}")
        return FieldElement({frozenset((name,)): _RF_ONE}, var)

    # -- predicates ----------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def is_one(self) -> bool:
        return self.terms == {frozenset(): _RF_ONE}

    def is_rational(self) -> Optional[Fraction]:
        """The constant value if the element is a rational number, else None."""
        if self.is_zero():
            return Fraction(0)
        if set(self.terms) != {frozenset()}:
            return None
        rf = self.terms[frozenset()]
        if rf.num.degree() <= 0 and rf.den.degree() <= 0:
            return Fraction(rf.num.leading(), rf.den.leading())
        return None

    def radical_names(self) -> set:
        names: set = set()
        for key in self.terms:
            names |= key
        return names

    def __bool__(self) -> bool:
        return not self.is_zero()

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            other = FieldElement.const(other, self.var)
        if not isinstance(other, FieldElement):
            return NotImplemented
        return self.var == other.var and self.terms == other.terms

    def __hash__(self) -> int:
        return hash((self.var, frozenset(self.terms.items())))

    # -- arithmetic ----------------------------------------------------------

    def _coerce(self, other) -> "FieldElement":
        if isinstance(other, FieldElement):
            if other.var != self.var:
                raise ValueError(
                    f"mixing variables {self.var!r} and {other.var!r}")
            return other
        if isinstance(other, (int, Fraction)):
            return FieldElement.const(other, self.var)
        raise TypeError(f"cannot coerce {type(other).__name__}")

    def __neg__(self) -> "FieldElement":
        return FieldElement({k: -v for k, v in self.terms.items()}, self.var)

    def __add__(self, other) -> "FieldElement":
        other = self._coerce(other)
        out = dict(self.terms)
        for key, rf in other.terms.items():
            cur = out.get(key)
            out[key] = rf if cur is None else cur + rf
        return FieldElement(out, self.var)

    __radd__ = __add__

    def __sub__(self, other) -> "FieldElement":
        return self + (-self._coerce(other))

    def __rsub__(self, other) -> "FieldElement":
        return self._coerce(other) - self

    def __mul__(self, other) -> "FieldElement":
        other = self._coerce(other)
        out: dict[frozenset, RatFunc] = {}
        for k1, r1 in self.terms.items():
            for k2, r2 in other.terms.items():
                rf = r1 * r2
                for name in k1 & k2:
                    sq = _RADICALS[name]
                    rf = rf * sq.terms[frozenset()]
                key = k1 ^ k2
                cur = out.get(key)
                out[key] = rf if cur is None else cur + rf
        return FieldElement(out, self.var)

    __rmul__ = __mul__

    def inverse(self) -> "FieldElement":
        if self.is_zero():
            raise DivisionByZero("inverting zero field element")
        if len(self.terms) > 1:
            raise UnsupportedRadicalInverse(
                "cannot invert a sum of distinct radical terms")
        ((key, rf),) = self.terms.items()
        denom = rf
        for name in key:
            denom = denom * _RADICALS[name].terms[frozenset()]
        return FieldElement({key: denom.inverse()}, self.var)

    def __truediv__(self, other) -> "FieldElement":
        other = self._coerce(other)
        return self * other.inverse()

    def __rtruediv__(self, other) -> "FieldElement":
        return self._coerce(other) / self

    def __pow__(self, k: int) -> "FieldElement":
        if k < 0:
            return self.inverse() ** (-k)
        acc = FieldElement.one(self.var)
        base = self
        while k:
            if k & 1:
                acc = acc * base
            base = base * base
            k >>= 1
        return acc

    # -- substitutions and limits --------------------------------------------

    def subs_inverse_var(self) -> "FieldElement":
        """Map var -> 1/var; every radical square must be invariant."""
        out: dict[frozenset, RatFunc] = {}
        for key, rf in self.terms.items():
            for name in key:
                sq = _RADICALS[name]
                if sq.subs_inverse_var() != sq:
                    raise ValueError(
                        f"radical {name!r} square not symmetric under inversion")
            new = rf.subs_inverse_var()
            cur = out.get(key)
            out[key] = new if cur is None else cur + new
        return FieldElement(out, self.var)

    def eval_rational(self, point: Fraction) -> "FieldElement":
        """Evaluate the rational parts at ``point``; radicals become exact
        square roots of their evaluated squares (canonical prime factors)."""
        result = FieldElement.zero(self.var)
        for key, rf in self.terms.items():
            term = FieldElement.const(rf.eval(point), self.var)
            for name in key:
                sq_val = _RADICALS[name].terms[frozenset()].eval(point)
                term = term * sqrt_of_fraction(sq_val, self.var)
            result = result + term
        return result

    def classical_limit(self) -> Fraction:
        """Value at the classical point (s=1, or h=0), rationals only."""
        point = Fraction(0) if self.var == "h" else Fraction(1)
        value = self.eval_rational(point)
        rat = value.is_rational()
        if rat is None:
            raise IrrationalRadicalLimit(
                "radical limit is not a rational number")
        return rat

    def classical_specialization(self) -> "FieldElement":
        """Classical-point value kept as a field element (radicals allowed)."""
        point = Fraction(0) if self.var == "h" else Fraction(1)
        return self.eval_rational(point)

    def eval_numeric(self, point: Fraction,
                     in_q: bool = False) -> Optional[Fraction]:
        """Spot evaluation at a rational point of the variable (or of q when
        ``in_q``); returns None when a radical has no rational square root."""
        if in_q:
            root = _rational_sqrt(point)
            if root is not None:
                point = root
            else:
                return self._eval_numeric_in_q(point)
        try:
            value = self.eval_rational(point)
        except PoleAtOne:
            return None
        return value.is_rational()

    def _eval_numeric_in_q(self, qval: Fraction) -> Optional[Fraction]:
        total = Fraction(0)
        for key, rf in self.terms.items():
            lr = rf.laurent()
            if lr is None or any(e % 2 for e in lr):
                return None
            part = sum((c * qval ** (e // 2) for e, c in lr.items()), Fraction(0))
            for name in key:
                sq = _RADICALS[name].terms[frozenset()].laurent()
                if sq is None or any(e % 2 for e in sq):
                    return None
                sval = sum((c * qval ** (e // 2) for e, c in sq.items()),
                           Fraction(0))
                root = _rational_sqrt(sval)
                if root is None:
                    return None
                part *= root
            total += part
        return total

    # -- rendering -----------------------------------------------------------

    def __str__(self) -> str:
        return render_field_element(self)

    def __repr__(self) -> str:
        return f"FieldElement<{self}>"


# ---------------------------------------------------------------------------
# Exact square roots of rationals
# ---------------------------------------------------------------------------

def _int_sqrt(n: int) -> Optional[int]:
    if n < 0:
        return None
    r = int(n ** 0.5)
    for cand in (r - 1, r, r + 1, r + 2):
        if cand >= 0 and cand * cand == n:
            return cand
    return None


def _rational_sqrt(fr: Fraction) -> Optional[Fraction]:
    a = _int_sqrt(fr.numerator)
    b = _int_sqrt(fr.denominator)
    if a is None or b is None:
        return None
    return Fraction(a, b)


def _square_free_split(n: int) -> tuple[int, int]:
    """n = outer**2 * inner with inner square-free (n > 0)."""
    outer, inner = 1, 1
    p = 2
    while p * p <= n:
        if n % p == 0:
            e = 0
            while n % p == 0:
                n //= p
                e += 1
            outer *= p ** (e // 2)
            if e % 2:
                inner *= p
        p += 1 if p == 2 else 2
    inner *= n
    return outer, inner


def sqrt_of_fraction(fr: Fraction, var: str = "s") -> FieldElement:
    """Principal square root of a nonnegative rational as a field element.

    Non-square parts become radical symbols ``sqrt<p>`` with prime indices,
    so products of roots canonicalize to the same radical multiset.
    """
    if fr < 0:
        raise IrrationalRadicalLimit("square root of a negative rational")
    if fr == 0:
        return FieldElement.zero(var)
    # sqrt(p/r) = sqrt(p*r)/r
    n = fr.numerator * fr.denominator
    outer, inner = _square_free_split(n)
    coeff = Fraction(outer, fr.denominator)
    result = FieldElement.const(coeff, var)
    for p in _prime_factors(inner):
        name = f"sqrt{p}"
        adjoin_radical(name, FieldElement.const(p, var))
        result = result * FieldElement.radical(name, var)
    return result


def _prime_factors(n: int) -> list[int]:
    out = []
    p = 2
    while p * p <= n:
        if n % p == 0:
            out.append(p)
            while n % p == 0:
                n //= p
        p += 1 if p == 2 else 2
    if n > 1:
        out.append(n)
    return out


# ---------------------------------------------------------------------------
# Operations with spec-facing names
# ---------------------------------------------------------------------------

def field_arith(a: FieldElement, b: FieldElement, op: str) -> FieldElement:
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    if op == "div":
        return a / b
    raise ValueError(f"unknown op {op!r}")


def classical_limit(a: FieldElement) -> Fraction:
    return a.classical_limit()


# ---------------------------------------------------------------------------
# Rendering
# ---------------------------------------------------------------------------

def _fmt_coeff(c: Fraction) -> str:
    if c.denominator == 1:
        return str(c.numerator)
    return f"{c.numerator}/{c.denominator}"


def _render_laurent(lr: dict[int, Fraction], var: str) -> str:
    """Render a Laurent polynomial; uses q when every s-exponent is even."""
    if not lr:
        return "0"
    if var == "s" and all(e % 2 == 0 for e in lr):
        sym, shown = "q", {e // 2: c for e, c in lr.items()}
    else:
        sym, shown = var, dict(lr)
    parts = []
    for e in sorted(shown, reverse=True):
        c = shown[e]
        if e == 0:
            body = _fmt_coeff(abs(c))
        else:
            head = sym if e == 1 else f"{sym}^{e}"
            body = head if abs(c) == 1 else f"{_fmt_coeff(abs(c))}*{head}"
        if not parts:
            parts.append(body if c > 0 else f"-{body}")
        else:
            parts.append(f"+ {body}" if c > 0 else f"- {body}")
    return " ".join(parts)


def _render_poly_in_s(p: Poly, var: str) -> str:
    return _render_laurent({i: Fraction(c) for i, c in enumerate(p.coeffs)
                            if c != 0}, var)


def _render_ratfunc(rf: RatFunc, var: str) -> str:
    lr = rf.laurent()
    if lr is not None:
        return _render_laurent(lr, var)
    num = _render_poly_in_s(rf.num, var)
    den = _render_poly_in_s(rf.den, var)
    return f"({num})/({den})"


def render_field_element(fe: FieldElement) -> str:
    if fe.is_zero():
        return "0"
    parts = []
    for key in sorted(fe.terms, key=lambda k: tuple(sorted(k))):
        rf = fe.terms[key]
        rads = "*".join(sorted(key))
        body = _render_ratfunc(rf, fe.var)
        negative = body.startswith("-")
        if negative and ("+" not in body and "- " not in body[1:]):
            body = body[1:]
            sign = "-"
        elif negative:
            body, sign = _render_ratfunc(-rf, fe.var), "-"
        else:
            sign = "+"
        if rads:
            if body == "1":
                body = rads
            elif (" " in body) or ("/" in body and "(" not in body):
                body = f"({body})*{rads}"
            else:
                body = f"{body}*{rads}"
        elif " " in body and len(fe.terms) > 1:
            body = f"({body})"
        if not parts:
            parts.append(body if sign == "+" else f"-{body}")
        else:
            parts.append(f"+ {body}" if sign == "+" else f"- {body}")
    return " ".join(parts)


# ---------------------------------------------------------------------------
# Convenience constructors used across the engine
# ---------------------------------------------------------------------------

def s_power(k: int) -> FieldElement:
    return FieldElement.var_power(k, "s")


def q_power(k: int) -> FieldElement:
    return FieldElement.var_power(2 * k, "s")


def one(var: str = "s") -> FieldElement:
    return FieldElement.one(var)


def zero(var: str = "s") -> FieldElement:
    return FieldElement.zero(var)


def const(value, var: str = "s") -> FieldElement:
    return FieldElement.const(value, var)
