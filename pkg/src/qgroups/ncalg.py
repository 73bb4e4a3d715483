"""Free noncommutative algebra with confluent normal-ordering rewriting.

Words over an ordered generator alphabet carry field coefficients; a
:class:`RewriteSystem` replaces adjacent letter pairs until every word is a
normal-ordered monomial.  Each shipped preset encodes one deformed algebra.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from typing import Callable, Iterable, Optional

from . import scalars as sc
from .errors import (
    BadTermOrder,
    NonTerminating,
    UnknownGenerator,
    UnknownPreset,
)
from .scalars import FieldElement

Word = tuple  # tuple of generator name strings

DEFAULT_STEP_BUDGET = 10 ** 6


@dataclass(frozen=True)
class Generator:
    name: str
    precedence: int


class NCPolynomial:
    """Finite linear combination of words with field coefficients."""

    __slots__ = ("var", "terms")

    def __init__(self, terms: dict[Word, FieldElement], var: str = "s"):
        self.var = var
        self.terms = {w: c for w, c in terms.items() if not c.is_zero()}

    # -- constructors --------------------------------------------------------

    @staticmethod
    def zero(var: str = "s") -> "NCPolynomial":
        return NCPolynomial({}, var)

    @staticmethod
    def unit(var: str = "s") -> "NCPolynomial":
        return NCPolynomial({(): sc.one(var)}, var)

    @staticmethod
    def gen(name: str, var: str = "s") -> "NCPolynomial":
        return NCPolynomial({(name,): sc.one(var)}, var)

    @staticmethod
    def word(names: Iterable[str], coeff=None, var: str = "s") -> "NCPolynomial":
        c = sc.one(var) if coeff is None else coeff
        return NCPolynomial({tuple(names): c}, var)

    @staticmethod
    def scalar(coeff: FieldElement) -> "NCPolynomial":
        return NCPolynomial({(): coeff}, coeff.var)

    # -- predicates ----------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def constant_part(self) -> FieldElement:
        return self.terms.get((), sc.zero(self.var))

    def is_scalar(self) -> bool:
        return all(w == () for w in self.terms)

    def generators(self) -> set:
        out: set = set()
        for w in self.terms:
            out.update(w)
        return out

    def __eq__(self, other) -> bool:
        if not isinstance(other, NCPolynomial):
            return NotImplemented
        return self.var == other.var and self.terms == other.terms

    def __hash__(self):
        raise TypeError("NCPolynomial is not hashable")

    # -- arithmetic ----------------------------------------------------------

    def _coerce(self, other) -> "NCPolynomial":
        if isinstance(other, NCPolynomial):
            return other
        if isinstance(other, FieldElement):
            return NCPolynomial({(): other}, self.var)
        if isinstance(other, int):
            return NCPolynomial({(): sc.const(other, self.var)}, self.var)
        raise TypeError(f"cannot coerce {type(other).__name__}")

    def __neg__(self) -> "NCPolynomial":
        return NCPolynomial({w: -c for w, c in self.terms.items()}, self.var)

    def __add__(self, other) -> "NCPolynomial":
        other = self._coerce(other)
        out = dict(self.terms)
        for w, c in other.terms.items():
            cur = out.get(w)
            out[w] = c if cur is None else cur + c
        return NCPolynomial(out, self.var)

    __radd__ = __add__

    def __sub__(self, other) -> "NCPolynomial":
        return self + (-self._coerce(other))

    def __rsub__(self, other) -> "NCPolynomial":
        return self._coerce(other) - self

    def __mul__(self, other) -> "NCPolynomial":
        other = self._coerce(other)
        out: dict[Word, FieldElement] = {}
        for w1, c1 in self.terms.items():
            for w2, c2 in other.terms.items():
                w = w1 + w2
                c = c1 * c2
                cur = out.get(w)
                out[w] = c if cur is None else cur + c
        return NCPolynomial(out, self.var)

    def __rmul__(self, other) -> "NCPolynomial":
        return self._coerce(other) * self

    def __pow__(self, k: int) -> "NCPolynomial":
        if k < 0:
            raise ValueError("negative power of a noncommutative polynomial")
        acc = NCPolynomial.unit(self.var)
        for _ in range(k):
            acc = acc * self
        return acc

    def scale(self, coeff) -> "NCPolynomial":
        c = coeff if isinstance(coeff, FieldElement) else sc.const(coeff, self.var)
        return NCPolynomial({w: v * c for w, v in self.terms.items()}, self.var)

    def map_coeffs(self, fn: Callable[[FieldElement], FieldElement]) -> "NCPolynomial":
        return NCPolynomial({w: fn(c) for w, c in self.terms.items()}, self.var)

    def __str__(self) -> str:
        return render_ncpoly(self)

    def __repr__(self) -> str:
        return f"NCPolynomial<{self}>"


class RewriteSystem:
    """Ordered alphabet plus rewrite rules on adjacent letter pairs.

    Every rule replacement must be strictly smaller than the rewritten pair
    under the term order (word length, then letter-weight sum, then
    precedence-lexicographic); this witnesses termination.  Weights default
    to zero, which recovers plain degree-then-lex.
    """

    def __init__(self, name: str, alphabet: Iterable[str],
                 rules: dict[tuple, NCPolynomial],
                 var: str = "s",
                 weights: Optional[dict[str, int]] = None,
                 check_termination: bool = True):
        self.name = name
        self.alphabet = tuple(alphabet)
        if len(set(self.alphabet)) != len(self.alphabet):
            raise ValueError("duplicate generator names")
        self.var = var
        self.index = {g: i for i, g in enumerate(self.alphabet)}
        self.weights = {g: 0 for g in self.alphabet}
        if weights:
            self.weights.update(weights)
        self.rules = dict(rules)
        for (g1, g2), repl in self.rules.items():
            if g1 not in self.index or g2 not in self.index:
                raise UnknownGenerator(f"rule pair ({g1}, {g2}) outside alphabet")
            unknown = repl.generators() - set(self.alphabet)
            if unknown:
                raise UnknownGenerator(f"rule replacement uses {unknown}")
        if check_termination:
            self._check_termination_witness()
        # Per-strategy memo of word normal forms; append-only.
        self._nf_cache: dict[bool, dict] = {False: {}, True: {}}

    # -- term order -----------------------------------------------------------

    def order_key(self, word: Word):
        return (len(word),
                sum(self.weights[g] for g in word),
                tuple(self.index[g] for g in word))

    def _check_termination_witness(self) -> None:
        for pair, repl in self.rules.items():
            redex_key = self.order_key(pair)
            for w in repl.terms:
                if not self.order_key(w) < redex_key:
                    raise BadTermOrder(
                        f"{self.name}: rule {pair} -> word {w} does not decrease")

    # -- reduction --------------------------------------------------------------

    def _find_redex(self, word: Word, rightmost: bool = False) -> Optional[int]:
        rng = range(len(word) - 2, -1, -1) if rightmost else range(len(word) - 1)
        for i in rng:
            if (word[i], word[i + 1]) in self.rules:
                return i
        return None

    def _word_normal_form(self, word: Word, budget: int,
                          rightmost: bool) -> dict:
        """Normal form of a single word as a word->coefficient map, memoized."""
        cache = self._nf_cache[rightmost]
        stack = [word]
        steps = 0
        while stack:
            w = stack[-1]
            if w in cache:
                stack.pop()
                continue
            pos = self._find_redex(w, rightmost)
            if pos is None:
                cache[w] = {w: sc.one(self.var)}
                stack.pop()
                continue
            repl = self.rules[(w[pos], w[pos + 1])]
            head, tail = w[:pos], w[pos + 2:]
            children = [(head + w2 + tail, c2) for w2, c2 in repl.terms.items()]
            missing = [cw for cw, _ in children if cw not in cache]
            if missing:
                stack.extend(missing)
                continue
            steps += 1
            if steps > budget:
                raise NonTerminating(
                    f"step budget {budget} exceeded in {self.name}")
            acc: dict[Word, FieldElement] = {}
            for cw, c2 in children:
                for w3, c3 in cache[cw].items():
                    c = c2 * c3
                    cur = acc.get(w3)
                    acc[w3] = c if cur is None else cur + c
            cache[w] = {k: v for k, v in acc.items() if not v.is_zero()}
            stack.pop()
        return cache[word]

    def normal_form(self, p: NCPolynomial,
                    budget: int = DEFAULT_STEP_BUDGET,
                    rightmost: bool = False) -> NCPolynomial:
        unknown = p.generators() - set(self.alphabet)
        if unknown:
            raise UnknownGenerator(f"generators {unknown} not in {self.name}")
        out: dict[Word, FieldElement] = {}
        for word, coeff in p.terms.items():
            for w2, c2 in self._word_normal_form(word, budget, rightmost).items():
                c = coeff * c2
                cur = out.get(w2)
                out[w2] = c if cur is None else cur + c
        return NCPolynomial(out, self.var)

    def is_normal(self, word: Word) -> bool:
        return self._find_redex(word) is None

    # -- defining relations ------------------------------------------------------

    def relations(self) -> list:
        """(label, lhs, rhs) for each rule, as free polynomials."""
        out = []
        for (g1, g2), repl in sorted(
                self.rules.items(),
                key=lambda kv: (self.index[kv[0][0]], self.index[kv[0][1]])):
            lhs = NCPolynomial.word((g1, g2), var=self.var)
            out.append((f"{g1}*{g2}", lhs, repl))
        return out

    def __repr__(self) -> str:
        return f"RewriteSystem({self.name!r}, {self.alphabet})"


# ---------------------------------------------------------------------------
# Operations
# ---------------------------------------------------------------------------

def normal_form(p: NCPolynomial, rs: RewriteSystem,
                budget: int = DEFAULT_STEP_BUDGET) -> NCPolynomial:
    return rs.normal_form(p, budget=budget)


def commutator(p: NCPolynomial, r: NCPolynomial,
               rs: RewriteSystem) -> NCPolynomial:
    return rs.normal_form(p * r - r * p)


def centrality_check(z: NCPolynomial, rs: RewriteSystem) -> bool:
    g_polys = (NCPolynomial.gen(g, rs.var) for g in rs.alphabet)
    return all(commutator(z, gp, rs).is_zero() for gp in g_polys)


@dataclass
class FuzzReport:
    system: str
    trials: int
    max_len: int
    counterexamples: list = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.counterexamples


def confluence_fuzz(rs: RewriteSystem, max_len: int, trials: int,
                    seed: int = 0) -> FuzzReport:
    """Reduce random words with two strategies and compare normal forms."""
    if max_len < 2:
        raise ValueError("max_len must be at least 2")
    rng = random.Random(seed)
    report = FuzzReport(rs.name, trials, max_len)
    for _ in range(trials):
        length = rng.randint(2, max_len)
        word = tuple(rng.choice(rs.alphabet) for _ in range(length))
        p = NCPolynomial.word(word, var=rs.var)
        left = rs.normal_form(p)
        right = rs.normal_form(p, rightmost=True)
        if left != right:
            report.counterexamples.append(word)
    return report


# ---------------------------------------------------------------------------
# Presets
# ---------------------------------------------------------------------------

PRESET_NAMES = ("quantum_plane", "fun_q_sl2", "fun_h_sl2", "q_oscillator",
                "parameter_algebra", "classical_plane")


def _q(k: int) -> FieldElement:
    return sc.q_power(k)


def _w(names, coeff=None, var="s") -> NCPolynomial:
    return NCPolynomial.word(names, coeff, var)


def _quantum_plane() -> RewriteSystem:
    one = sc.one()
    rules = {
        ("Y", "X"): _w("XY", _q(-1)),
        ("dY", "dX"): _w(("dX", "dY"), _q(1)),
        ("dX", "Y"): _w(("Y", "dX"), _q(1)),
        ("dY", "X"): _w(("X", "dY"), _q(1)),
        ("dX", "X"): (_w(("X", "dX"), _q(2)) + _w((), one)
                      + _w(("Y", "dY"), _q(2) - 1)),
        ("dY", "Y"): _w(("Y", "dY"), _q(2)) + _w((), one),
    }
    return RewriteSystem("quantum_plane", ("X", "Y", "dX", "dY"), rules)


def _fun_q_sl2() -> RewriteSystem:
    rules = {
        ("B", "A"): _w("AB", _q(-1)),
        ("C", "A"): _w("AC", _q(-1)),
        ("D", "C"): _w("CD", _q(-1)),
        ("D", "B"): _w("BD", _q(-1)),
        ("C", "B"): _w("BC"),
        ("D", "A"): _w("AD") - _w("BC", _q(1) - _q(-1)),
    }
    return RewriteSystem("fun_q_sl2", ("A", "B", "C", "D"), rules)


def _fun_h_sl2(var: str = "h") -> RewriteSystem:
    h = sc.FieldElement.var_power(1, var)

    def w(names, coeff=None):
        return _w(names, coeff, var)

    # Commutators [A,B]=hA^2-h, [A,C]=-hC^2, [A,D]=hAC-hDC, [B,C]=-hAC-hCD,
    # [B,D]=h-hD^2, [C,D]=hC^2, together with the unit determinant
    # AD - BC - hAC = 1.  The determinant is a defining relation here (the
    # matrix coproduct is a homomorphism only in the quotient), so the normal
    # order keeps A and D adjacent and the pair A*D is itself a redex.
    # Replacements are pre-normalized; the letter weights below witness
    # termination.
    rules = {
        ("B", "A"): w("AB") - w("AA", h) + w((), h),
        ("C", "A"): w("AC") + w("CC", h),
        ("D", "A"): w(()) + w("BC") + w("DC", h),
        ("C", "B"): w("BC") + w("AC", h) + w("DC", h) + w("CC", h * h),
        ("B", "D"): w("DB") + w((), h) - w("DD", h),
        ("C", "D"): w("DC") + w("CC", h),
        ("A", "D"): w(()) + w("BC") + w("AC", h),
    }
    weights = {"A": 2, "D": 3, "B": 4, "C": 0}
    return RewriteSystem("fun_h_sl2", ("A", "D", "B", "C"), rules,
                         var=var, weights=weights)


def fun_h_system(var: str = "h") -> RewriteSystem:
    """The h-deformed matrix algebra, optionally over another variable name
    (used to compare against q-side objects in the same field)."""
    return _fun_h_sl2(var)


def _q_oscillator() -> RewriteSystem:
    one = sc.one()
    rules = {
        ("a", "adag"): _w(("adag", "a"), _q(1)) + _w(("kinv",), one),
        ("k", "adag"): _w(("adag", "k"), _q(1)),
        ("k", "a"): _w(("a", "k"), _q(-1)),
        ("kinv", "adag"): _w(("adag", "kinv"), _q(-1)),
        ("kinv", "a"): _w(("a", "kinv"), _q(1)),
        ("k", "kinv"): _w((), one),
        ("kinv", "k"): _w((), one),
    }
    return RewriteSystem("q_oscillator", ("adag", "a", "k", "kinv"), rules)


def _parameter_algebra() -> RewriteSystem:
    one = sc.one()
    rules = {
        ("beta", "E"): _w(("E", "beta"), _q(-1)),
        ("gamma", "E"): _w(("E", "gamma"), _q(-1)),
        ("beta", "Einv"): _w(("Einv", "beta"), _q(1)),
        ("gamma", "Einv"): _w(("Einv", "gamma"), _q(1)),
        ("gamma", "beta"): _w(("beta", "gamma"), one),
        ("E", "Einv"): _w((), one),
        ("Einv", "E"): _w((), one),
    }
    return RewriteSystem("parameter_algebra", ("Einv", "E", "beta", "gamma"),
                         rules)


def specialize_classical(rs: RewriteSystem, name: str) -> RewriteSystem:
    """Replace every rule coefficient by its classical-point value."""
    rules = {
        pair: repl.map_coeffs(
            lambda c: sc.const(c.classical_limit(), rs.var))
        for pair, repl in rs.rules.items()
    }
    return RewriteSystem(name, rs.alphabet, rules, var=rs.var,
                         weights=dict(rs.weights))


def make_preset(name: str) -> RewriteSystem:
    if name in ("fun_q_sl2", "funq"):
        return _fun_q_sl2()
    if name == "quantum_plane":
        return _quantum_plane()
    if name == "fun_h_sl2":
        return _fun_h_sl2()
    if name == "q_oscillator":
        return _q_oscillator()
    if name == "parameter_algebra":
        return _parameter_algebra()
    if name == "classical_plane":
        return specialize_classical(_quantum_plane(), "classical_plane")
    raise UnknownPreset(f"unknown preset {name!r}")


def combined_covariance_system() -> RewriteSystem:
    """Quantum-matrix entries adjoined to the plane calculus; the entries
    commute with the coordinates and with the derivatives."""
    plane = _quantum_plane()
    funq = _fun_q_sl2()
    alphabet = funq.alphabet + plane.alphabet
    rules: dict[tuple, NCPolynomial] = {}
    rules.update(funq.rules)
    rules.update(plane.rules)
    for p in plane.alphabet:
        for t in funq.alphabet:
            rules[(p, t)] = _w((t, p))
    return RewriteSystem("covariance", alphabet, rules)


# ---------------------------------------------------------------------------
# Quantum determinant and the unit-determinant quotient
# ---------------------------------------------------------------------------

def quantum_determinant(var: str = "s") -> NCPolynomial:
    """A*D - q*B*C, the central element of the q-deformed matrix algebra."""
    return _w("AD", var=var) - _w("BC", _q(1), var)


def jordanian_determinant() -> NCPolynomial:
    """A*D - B*C - h*A*C, central in the h-deformed matrix algebra."""
    h = sc.FieldElement.var_power(1, "h")
    return (_w("AD", var="h") - _w("BC", var="h") - _w("AC", h, "h"))


_T_LETTERS = ("A", "B", "C", "D")


def impose_unit_determinant(p: NCPolynomial, rs: RewriteSystem) -> NCPolynomial:
    """Reduce a normal form into the quotient where A*D - q*B*C = 1.

    Normal words factor as A^a B^b C^c D^d times letters that commute with
    the matrix entries; while both a and d are positive one A and one D are
    traded for 1 + q*B*C, picking up q^(b+c) from the reordering.
    """
    p = rs.normal_form(p)
    out = NCPolynomial.zero(p.var)
    stack = list(p.terms.items())
    while stack:
        word, coeff = stack.pop()
        counts = {g: 0 for g in _T_LETTERS}
        rest = []
        for g in word:
            if g in counts:
                counts[g] += 1
            else:
                rest.append(g)
        a, b, c, d = (counts[g] for g in _T_LETTERS)
        if a == 0 or d == 0:
            out = out + NCPolynomial({word: coeff}, p.var)
            continue
        factor = coeff * _q(b + c)
        base = (("A",) * (a - 1) + ("B",) * b + ("C",) * c
                + ("D",) * (d - 1) + tuple(rest))
        extra = (("A",) * (a - 1) + ("B",) * (b + 1) + ("C",) * (c + 1)
                 + ("D",) * (d - 1) + tuple(rest))
        stack.append((base, factor))
        stack.append((extra, factor * _q(1)))
    return out


def set_generators_to_zero(p: NCPolynomial, names) -> NCPolynomial:
    """Project onto the quotient where the named generators vanish."""
    dropped = set(names)
    return NCPolynomial(
        {w: c for w, c in p.terms.items() if not dropped & set(w)}, p.var)


def inverse_check_2x2(rs: RewriteSystem,
                      inverse_entries: Optional[list] = None) -> bool:
    """Both products of the fundamental matrix with its inverse reduce to the
    identity once the quantum determinant is set to one."""
    if rs.name != "fun_q_sl2":
        raise ValueError("inverse check is defined for the fun_q_sl2 preset")
    g = NCPolynomial.gen
    T = [[g("A"), g("B")], [g("C"), g("D")]]
    if inverse_entries is None:
        Ti = [[g("D"), g("B").scale(-_q(-1))],
              [g("C").scale(-_q(1)), g("A")]]
    else:
        Ti = inverse_entries
    for left, right in ((T, Ti), (Ti, T)):
        for i in range(2):
            for j in range(2):
                entry = sum(
                    (left[i][l] * right[l][j] for l in range(2)),
                    NCPolynomial.zero(),
                )
                entry = impose_unit_determinant(entry, rs)
                expected = NCPolynomial.unit() if i == j else NCPolynomial.zero()
                if entry != expected:
                    return False
    return True


# ---------------------------------------------------------------------------
# Rendering
# ---------------------------------------------------------------------------

def _render_word(word: Word) -> str:
    if not word:
        return "1"
    parts = []
    i = 0
    while i < len(word):
        j = i
        while j < len(word) and word[j] == word[i]:
            j += 1
        run = j - i
        parts.append(word[i] if run == 1 else f"{word[i]}^{run}")
        i = j
    return "*".join(parts)


def _split_sign(coeff: FieldElement) -> tuple[str, FieldElement]:
    """Pull a leading minus out of a coefficient for display."""
    text = str(coeff)
    if text.startswith("-"):
        return "-", -coeff
    return "+", coeff


def render_ncpoly(p: NCPolynomial, rs: Optional[RewriteSystem] = None) -> str:
    if p.is_zero():
        return "0"
    if rs is not None:
        def key(w):
            return (-len(w), tuple(rs.index[g] for g in w))
    else:
        def key(w):
            return (-len(w), w)
    parts = []
    for word in sorted(p.terms, key=key):
        sign, coeff = _split_sign(p.terms[word])
        ctext = str(coeff)
        multi = " " in ctext
        if not word:
            body = f"({ctext})" if multi else ctext
        elif coeff.is_one():
            body = _render_word(word)
        else:
            body = f"({ctext})*{_render_word(word)}" if multi \
                else f"{ctext}*{_render_word(word)}"
        if not parts:
            parts.append(body if sign == "+" else f"-{body}")
        else:
            parts.append(f"+ {body}" if sign == "+" else f"- {body}")
    return " ".join(parts)
