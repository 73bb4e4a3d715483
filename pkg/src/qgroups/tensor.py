"""Tensor products of algebra elements and matrices over algebras.

A :class:`TensorElement` is a linear combination of pure tensors whose slots
multiply independently: (u (x) v)(u' (x) v') = uu' (x) vv'.  Slots are kept in
normal form with respect to their own rewrite systems.  :class:`AlgMatrix` is
a rectangular matrix whose entries are field elements, noncommutative
polynomials, or tensor elements (one kind per matrix).
"""

from __future__ import annotations

from typing import Callable, Sequence

from . import scalars as sc
from .errors import BadDecomposition, DimensionMismatch, SingularR
from .ncalg import NCPolynomial, RewriteSystem
from .scalars import FieldElement


class TensorElement:
    """Linear combination of pure tensors of normal-ordered words."""

    __slots__ = ("systems", "terms", "var")

    def __init__(self, systems: Sequence[RewriteSystem],
                 terms: dict[tuple, FieldElement],
                 normalize: bool = True):
        self.systems = tuple(systems)
        self.var = self.systems[0].var if self.systems else "s"
        if normalize:
            terms = self._normalize(terms)
        self.terms = {k: v for k, v in terms.items() if not v.is_zero()}

    def _normalize(self, terms: dict[tuple, FieldElement]) -> dict:
        out: dict[tuple, FieldElement] = {}
        for words, coeff in terms.items():
            if coeff.is_zero():
                continue
            expanded = [(words, coeff)]
            for slot, rs in enumerate(self.systems):
                nxt = []
                for ws, c in expanded:
                    nf = rs.normal_form(NCPolynomial({ws[slot]: c}, self.var))
                    for w2, c2 in nf.terms.items():
                        nxt.append((ws[:slot] + (w2,) + ws[slot + 1:], c2))
                expanded = nxt
            for ws, c in expanded:
                cur = out.get(ws)
                out[ws] = c if cur is None else cur + c
        return out

    # -- constructors ---------------------------------------------------------

    @staticmethod
    def zero(systems: Sequence[RewriteSystem]) -> "TensorElement":
        return TensorElement(systems, {})

    @staticmethod
    def unit(systems: Sequence[RewriteSystem]) -> "TensorElement":
        n = len(systems)
        var = systems[0].var
        return TensorElement(systems, {((),) * n: sc.one(var)},
                             normalize=False)

    @staticmethod
    def pure(systems: Sequence[RewriteSystem], *factors: NCPolynomial
             ) -> "TensorElement":
        """Tensor product of one polynomial per slot."""
        if len(factors) != len(systems):
            raise DimensionMismatch("one factor per slot required")
        var = systems[0].var
        out: dict[tuple, FieldElement] = {}
        from itertools import product
        items = [list(f.terms.items()) for f in factors]
        for combo in product(*items):
            words = tuple(w for w, _ in combo)
            coeff = sc.one(var)
            for _, c in combo:
                coeff = coeff * c
            cur = out.get(words)
            out[words] = coeff if cur is None else cur + coeff
        return TensorElement(systems, out)

    # -- structure -------------------------------------------------------------

    @property
    def nslots(self) -> int:
        return len(self.systems)

    def is_zero(self) -> bool:
        return not self.terms

    def __eq__(self, other) -> bool:
        if not isinstance(other, TensorElement):
            return NotImplemented
        return self.nslots == other.nslots and self.terms == other.terms

    def __hash__(self):
        raise TypeError("TensorElement is not hashable")

    # -- arithmetic --------------------------------------------------------------

    def _coerce(self, other) -> "TensorElement":
        if isinstance(other, TensorElement):
            if other.nslots != self.nslots:
                raise DimensionMismatch("slot counts differ")
            return other
        if isinstance(other, (int, FieldElement)):
            c = other if isinstance(other, FieldElement) \
                else sc.const(other, self.var)
            return TensorElement(
                self.systems, {((),) * self.nslots: c}, normalize=False)
        raise TypeError(f"cannot coerce {type(other).__name__}")

    def __neg__(self) -> "TensorElement":
        return TensorElement(self.systems,
                             {k: -v for k, v in self.terms.items()},
                             normalize=False)

    def __add__(self, other) -> "TensorElement":
        other = self._coerce(other)
        out = dict(self.terms)
        for k, v in other.terms.items():
            cur = out.get(k)
            out[k] = v if cur is None else cur + v
        return TensorElement(self.systems, out, normalize=False)

    __radd__ = __add__

    def __sub__(self, other) -> "TensorElement":
        return self + (-self._coerce(other))

    def __mul__(self, other) -> "TensorElement":
        other = self._coerce(other)
        out: dict[tuple, FieldElement] = {}
        for ws1, c1 in self.terms.items():
            for ws2, c2 in other.terms.items():
                words = tuple(w1 + w2 for w1, w2 in zip(ws1, ws2))
                c = c1 * c2
                cur = out.get(words)
                out[words] = c if cur is None else cur + c
        return TensorElement(self.systems, out)

    def __rmul__(self, other) -> "TensorElement":
        return self._coerce(other) * self

    def __pow__(self, k: int) -> "TensorElement":
        acc = TensorElement.unit(self.systems)
        for _ in range(k):
            acc = acc * self
        return acc

    def scale(self, coeff: FieldElement) -> "TensorElement":
        return TensorElement(self.systems,
                             {k: v * coeff for k, v in self.terms.items()},
                             normalize=False)

    # -- slot operations -----------------------------------------------------------

    def flip(self) -> "TensorElement":
        """Exchange the two slots."""
        if self.nslots != 2:
            raise DimensionMismatch("flip needs exactly two slots")
        return TensorElement(
            (self.systems[1], self.systems[0]),
            {(w2, w1): c for (w1, w2), c in self.terms.items()},
            normalize=False)

    def slot_polynomial(self, slot: int) -> NCPolynomial:
        """Project a one-hot element; only sensible when other slots are units."""
        out: dict = {}
        for ws, c in self.terms.items():
            cur = out.get(ws[slot])
            out[ws[slot]] = c if cur is None else cur + c
        return NCPolynomial(out, self.var)

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for ws in sorted(self.terms, key=lambda t: tuple(map(str, t))):
            c = self.terms[ws]
            from .ncalg import _render_word, _split_sign
            sign, coeff = _split_sign(c)
            body = "(x)".join(_render_word(w) for w in ws)
            ctext = str(coeff)
            if not coeff.is_one():
                body = (f"({ctext})*{body}" if " " in ctext
                        else f"{ctext}*{body}")
            if not parts:
                parts.append(body if sign == "+" else f"-{body}")
            else:
                parts.append(f"+ {body}" if sign == "+" else f"- {body}")
        return " ".join(parts)

    def __repr__(self) -> str:
        return f"TensorElement<{self}>"


# ---------------------------------------------------------------------------
# Matrices
# ---------------------------------------------------------------------------

def _entry_zero_like(entry):
    if isinstance(entry, FieldElement):
        return sc.zero(entry.var)
    if isinstance(entry, NCPolynomial):
        return NCPolynomial.zero(entry.var)
    if isinstance(entry, TensorElement):
        return TensorElement.zero(entry.systems)
    raise TypeError(f"unsupported entry type {type(entry).__name__}")


class AlgMatrix:
    """Rectangular matrix over the field, an algebra, or a tensor algebra."""

    __slots__ = ("rows", "cols", "entries")

    def __init__(self, entries: Sequence[Sequence]):
        self.entries = [list(row) for row in entries]
        self.rows = len(self.entries)
        self.cols = len(self.entries[0]) if self.rows else 0
        if any(len(row) != self.cols for row in self.entries):
            raise DimensionMismatch("ragged rows")

    # -- constructors ------------------------------------------------------------

    @staticmethod
    def identity(n: int, var: str = "s") -> "AlgMatrix":
        return AlgMatrix([[sc.one(var) if i == j else sc.zero(var)
                           for j in range(n)] for i in range(n)])

    @staticmethod
    def zero(rows: int, cols: int, var: str = "s") -> "AlgMatrix":
        return AlgMatrix([[sc.zero(var)] * cols for _ in range(rows)])

    @staticmethod
    def diagonal(values: Sequence[FieldElement]) -> "AlgMatrix":
        n = len(values)
        var = values[0].var
        return AlgMatrix([[values[i] if i == j else sc.zero(var)
                           for j in range(n)] for i in range(n)])

    # -- basics ----------------------------------------------------------------

    def __getitem__(self, ij):
        i, j = ij
        return self.entries[i][j]

    def __eq__(self, other) -> bool:
        if not isinstance(other, AlgMatrix):
            return NotImplemented
        if (self.rows, self.cols) != (other.rows, other.cols):
            return False
        return all(self.entries[i][j] == other.entries[i][j]
                   for i in range(self.rows) for j in range(self.cols))

    def __hash__(self):
        raise TypeError("AlgMatrix is not hashable")

    def is_zero(self) -> bool:
        return all(_is_zero_entry(e) for row in self.entries for e in row)

    def map_entries(self, fn: Callable) -> "AlgMatrix":
        return AlgMatrix([[fn(e) for e in row] for row in self.entries])

    def transpose(self) -> "AlgMatrix":
        return AlgMatrix([[self.entries[i][j] for i in range(self.rows)]
                          for j in range(self.cols)])

    def is_diagonal(self) -> bool:
        return all(_is_zero_entry(self.entries[i][j])
                   for i in range(self.rows) for j in range(self.cols)
                   if i != j)

    def scale(self, coeff) -> "AlgMatrix":
        return self.map_entries(lambda e: _scale_entry(e, coeff))

    # -- ring operations -----------------------------------------------------------

    def __add__(self, other: "AlgMatrix") -> "AlgMatrix":
        if (self.rows, self.cols) != (other.rows, other.cols):
            raise DimensionMismatch("shape mismatch in addition")
        return AlgMatrix([[_add_entries(self.entries[i][j], other.entries[i][j])
                           for j in range(self.cols)] for i in range(self.rows)])

    def __sub__(self, other: "AlgMatrix") -> "AlgMatrix":
        return self + other.map_entries(_neg_entry)

    def __neg__(self) -> "AlgMatrix":
        return self.map_entries(_neg_entry)

    def __matmul__(self, other: "AlgMatrix") -> "AlgMatrix":
        if self.cols != other.rows:
            raise DimensionMismatch(
                f"{self.rows}x{self.cols} times {other.rows}x{other.cols}")
        out = []
        for i in range(self.rows):
            row = []
            for j in range(other.cols):
                acc = None
                for l in range(self.cols):
                    term = _mul_entries(self.entries[i][l], other.entries[l][j])
                    acc = term if acc is None else _add_entries(acc, term)
                row.append(acc)
            out.append(row)
        return AlgMatrix(out)

    def __pow__(self, k: int) -> "AlgMatrix":
        if self.rows != self.cols:
            raise DimensionMismatch("powers need a square matrix")
        sample = self.entries[0][0]
        var = sample.var if hasattr(sample, "var") else "s"
        acc = AlgMatrix.identity(self.rows, var)
        for _ in range(k):
            acc = acc @ self
        return acc

    # -- field-entry specifics --------------------------------------------------------

    def inverse(self) -> "AlgMatrix":
        """Gauss-Jordan inverse for field-entry matrices.

        Pivots must be invertible field elements (at most one radical term);
        raises SingularR otherwise.
        """
        n = self.rows
        if n != self.cols:
            raise DimensionMismatch("inverse needs a square matrix")
        a = [list(row) for row in self.entries]
        var = a[0][0].var
        b = [[sc.one(var) if i == j else sc.zero(var) for j in range(n)]
             for i in range(n)]
        for col in range(n):
            piv = None
            for r in range(col, n):
                if not a[r][col].is_zero() and len(a[r][col].terms) == 1:
                    piv = r
                    break
            if piv is None:
                for r in range(col, n):
                    if not a[r][col].is_zero():
                        piv = r
                        break
                if piv is None:
                    raise SingularR("no usable pivot column")
            a[col], a[piv] = a[piv], a[col]
            b[col], b[piv] = b[piv], b[col]
            inv = a[col][col].inverse()
            a[col] = [x * inv for x in a[col]]
            b[col] = [x * inv for x in b[col]]
            for r in range(n):
                if r != col and not a[r][col].is_zero():
                    f = a[r][col]
                    a[r] = [x - f * y for x, y in zip(a[r], a[col])]
                    b[r] = [x - f * y for x, y in zip(b[r], b[col])]
        return AlgMatrix(b)

    def __str__(self) -> str:
        rows = []
        for row in self.entries:
            rows.append("[" + ", ".join(str(e) for e in row) + "]")
        return "[" + ",\n ".join(rows) + "]"

    def __repr__(self) -> str:
        return f"AlgMatrix({self.rows}x{self.cols})"


def _is_zero_entry(e) -> bool:
    return e.is_zero()


def _neg_entry(e):
    return -e


def _scale_entry(e, coeff):
    if isinstance(e, FieldElement):
        return e * coeff
    return e.scale(coeff)


def _promote(a, b):
    """Promote two entries to a common kind (scalars lift into algebras)."""
    if isinstance(a, FieldElement) and isinstance(b, NCPolynomial):
        return NCPolynomial({(): a}, a.var), b
    if isinstance(a, NCPolynomial) and isinstance(b, FieldElement):
        return a, NCPolynomial({(): b}, b.var)
    if isinstance(a, FieldElement) and isinstance(b, TensorElement):
        return b._coerce(a), b
    if isinstance(a, TensorElement) and isinstance(b, FieldElement):
        return a, a._coerce(b)
    return a, b


def _add_entries(a, b):
    a, b = _promote(a, b)
    return a + b


def _mul_entries(a, b):
    a, b = _promote(a, b)
    return a * b


# ---------------------------------------------------------------------------
# Kronecker and dotted products
# ---------------------------------------------------------------------------

def kron(a: AlgMatrix, b: AlgMatrix) -> AlgMatrix:
    """Kronecker product with row index (i, k) lexicographic; the left
    factor's entry stays to the left in every product."""
    out = []
    for i in range(a.rows):
        for k in range(b.rows):
            row = []
            for j in range(a.cols):
                for l in range(b.cols):
                    row.append(_mul_entries(a.entries[i][j], b.entries[k][l]))
            out.append(row)
    return AlgMatrix(out)


def kron_many(*mats: AlgMatrix) -> AlgMatrix:
    acc = mats[0]
    for m in mats[1:]:
        acc = kron(acc, m)
    return acc


def dotted_tensor(t1: AlgMatrix, t2: AlgMatrix,
                  systems: Sequence[RewriteSystem]) -> AlgMatrix:
    """Matrix of two-slot tensors with entry (i, j) = sum_l T1[i,l] (x) T2[l,j]."""
    if t1.rows != t1.cols or t2.rows != t2.cols or t1.rows != t2.rows:
        raise DimensionMismatch("dotted product needs equal square matrices")
    n = t1.rows
    out = []
    for i in range(n):
        row = []
        for j in range(n):
            acc = TensorElement.zero(systems)
            for l in range(n):
                u = _as_ncpoly(t1.entries[i][l], systems[0].var)
                v = _as_ncpoly(t2.entries[l][j], systems[1].var)
                acc = acc + TensorElement.pure(systems, u, v)
            row.append(acc)
        out.append(row)
    return AlgMatrix(out)


def _as_ncpoly(e, var: str) -> NCPolynomial:
    if isinstance(e, NCPolynomial):
        return e
    if isinstance(e, FieldElement):
        return NCPolynomial({(): e}, var)
    raise TypeError("dotted product entries must be algebra-valued")


def flip(t: TensorElement) -> TensorElement:
    return t.flip()


# ---------------------------------------------------------------------------
# Slot embeddings for scalar matrices
# ---------------------------------------------------------------------------

def embed_3slot(r: AlgMatrix, position: str, dim: int) -> AlgMatrix:
    """Embed a dim^2 x dim^2 matrix into three slots of dimension dim.

    ``position`` names the pair of slots acted on: "12", "13" or "23"; the
    remaining slot carries the identity.
    """
    if r.rows != dim * dim or r.cols != dim * dim:
        raise DimensionMismatch("matrix is not dim^2 square")
    if position not in ("12", "13", "23"):
        raise BadDecomposition(f"unknown position {position!r}")
    var = r.entries[0][0].var
    n = dim ** 3
    out = AlgMatrix.zero(n, n, var)

    def split(idx):
        # idx = ((i1 * dim) + i2) * dim + i3
        i3 = idx % dim
        i2 = (idx // dim) % dim
        i1 = idx // (dim * dim)
        return i1, i2, i3

    for row in range(n):
        i1, i2, i3 = split(row)
        for col in range(n):
            j1, j2, j3 = split(col)
            if position == "12":
                if i3 != j3:
                    continue
                val = r.entries[i1 * dim + i2][j1 * dim + j2]
            elif position == "23":
                if i1 != j1:
                    continue
                val = r.entries[i2 * dim + i3][j2 * dim + j3]
            else:
                if i2 != j2:
                    continue
                val = r.entries[i1 * dim + i3][j1 * dim + j3]
            out.entries[row][col] = val
    return out


def slot_swap_matrix(dim1: int, dim2: int, var: str = "s") -> AlgMatrix:
    """Permutation matrix mapping basis (i, k) to (k, i)."""
    rows = dim1 * dim2
    out = AlgMatrix.zero(dim2 * dim1, rows, var)
    for i in range(dim1):
        for k in range(dim2):
            out.entries[k * dim1 + i][i * dim2 + k] = sc.one(var)
    return out


def matrix_slot_flip(m: AlgMatrix, dim1: int, dim2: int) -> AlgMatrix:
    """Conjugate a matrix on slot1 (x) slot2 into one on slot2 (x) slot1."""
    var = m.entries[0][0].var
    p = slot_swap_matrix(dim1, dim2, var)
    pinv = slot_swap_matrix(dim2, dim1, var)
    return p @ m @ pinv
