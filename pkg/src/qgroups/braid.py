"""Yang-Baxter, RTT, RLL and braid-group relation verification."""

from __future__ import annotations

from typing import Optional

from . import ncalg as nc
from . import scalars as sc
from .errors import DimensionMismatch, TooLarge
from .ncalg import NCPolynomial, RewriteSystem
from .report import Report
from .reps import SpinRep, aux_blocks, l_matrices
from .tensor import AlgMatrix, embed_3slot, kron, kron_many, slot_swap_matrix

BRAID_SPACE_GUARD = 2 ** 9


def ybe_check(r: AlgMatrix, dim: int) -> bool:
    """R12 R13 R23 = R23 R13 R12 on the triple tensor space, exactly."""
    if r.rows != dim * dim or r.cols != dim * dim:
        raise DimensionMismatch("R is not dim^2 square")
    r12 = embed_3slot(r, "12", dim)
    r13 = embed_3slot(r, "13", dim)
    r23 = embed_3slot(r, "23", dim)
    return r12 @ r13 @ r23 == r23 @ r13 @ r12


def _free_matrix_system(var: str = "s") -> RewriteSystem:
    return RewriteSystem("free_matrix_entries", ("A", "B", "C", "D"), {},
                         var=var)


def _match_relation(entry: NCPolynomial, relations) -> Optional[str]:
    """Label of the defining relation the entry is a scalar multiple of."""
    for label, lhs, rhs in relations:
        rel = lhs - rhs
        word = next(iter(rel.terms))
        if word not in entry.terms:
            continue
        factor = entry.terms[word] / rel.terms[word]
        if entry == rel.scale(factor):
            return label
    return None


def rtt_check(r: AlgMatrix, rs: Optional[RewriteSystem] = None) -> Report:
    """The exchange relation R^-1 T1 T2 = T2 T1 R^-1 entrywise, plus the
    identification of each nonzero free entry equation with one defining
    relation of the matrix algebra.

    The inverse form matches the convention of the L-matrix exchange
    relations; with this R the plain form R T1 T2 = T2 T1 R would impose the
    q <-> 1/q image of the relations instead.
    """
    if rs is None:
        rs = nc.make_preset("fun_q_sl2")
    if r.rows != 4 or r.cols != 4:
        raise DimensionMismatch("R must be 4x4")
    var = rs.var
    g = lambda n: NCPolynomial.gen(n, var)
    t = AlgMatrix([[g("A"), g("B")], [g("C"), g("D")]])
    ident = AlgMatrix.identity(2, var).map_entries(
        lambda c: NCPolynomial({(): c}, var))
    t1 = kron(t, ident)
    t2 = kron(ident, t)
    rinv = r.inverse()
    diff = (rinv @ t1 @ t2) - (t2 @ t1 @ rinv)

    report = Report(f"RTT relation against {rs.name}")
    report.note("exchange relation taken in the form R^-1 T1 T2 = T2 T1 R^-1")
    relations = rs.relations()
    seen = set()
    for i in range(4):
        for j in range(4):
            entry = diff.entries[i][j]
            reduced = rs.normal_form(entry)
            name = f"entry ({i + 1},{j + 1})"
            if entry.is_zero():
                report.add(name, "0", "0", True)
                continue
            label = _match_relation(entry, relations)
            if label is not None:
                seen.add(label)
                name += f" ~ relation {label}"
            report.add(name, nc.render_ncpoly(reduced, rs), "0",
                       reduced.is_zero())
    missing = [label for label, _, _ in relations if label not in seen]
    report.check_true(
        "all defining relations appear among the entry equations",
        not missing, lhs=",".join(sorted(seen)),
        rhs=",".join(label for label, _, _ in relations))
    return report


# ---------------------------------------------------------------------------
# RLL
# ---------------------------------------------------------------------------

def _embed_l(l: AlgMatrix, rep_dim: int, which: int) -> AlgMatrix:
    """Embed an L-matrix on aux (x) aux (x) rep, acting on auxiliary slot
    ``which`` (1 or 2) and on the shared representation space."""
    blocks = aux_blocks(l, rep_dim)
    var = l.entries[0][0].var
    i2 = AlgMatrix.identity(2, var)
    total = None
    for a in range(2):
        for b in range(2):
            e_ab = AlgMatrix.zero(2, 2, var)
            e_ab.entries[a][b] = sc.one(var)
            if which == 1:
                term = kron_many(e_ab, i2, blocks[a][b])
            else:
                term = kron_many(i2, e_ab, blocks[a][b])
            total = term if total is None else total + term
    return total


def rll_check(rep: SpinRep, r: AlgMatrix) -> Report:
    """The three exchange relations between the triangular L-matrices,
    R^-1 L1 L2 = L2 L1 R^-1 for the (+,+), (-,-) and (+,-) pairs."""
    report = Report(f"RLL relations at j={rep.j}")
    report.note("auxiliary spaces ordered aux1 (x) aux2 (x) representation; "
                "the identity in L1 = L (x) 1 acts on the second auxiliary slot")
    lp, lm = l_matrices(rep)
    d = rep.dim
    rinv = r.inverse()
    var = r.entries[0][0].var
    r_emb = kron(rinv, AlgMatrix.identity(d, var))
    pairs = [("(+,+)", lp, lp), ("(-,-)", lm, lm), ("(+,-)", lp, lm)]
    for label, la, lb in pairs:
        l1 = _embed_l(la, d, 1)
        l2 = _embed_l(lb, d, 2)
        left = r_emb @ l1 @ l2
        right = l2 @ l1 @ r_emb
        report.check_true(f"R^-1 L1 L2 = L2 L1 R^-1 for {label}",
                          left == right)
    return report


# ---------------------------------------------------------------------------
# Braid group
# ---------------------------------------------------------------------------

def braided_rmatrix(r: AlgMatrix, dim: int) -> AlgMatrix:
    """P R, the braid form of an R-matrix."""
    var = r.entries[0][0].var
    return slot_swap_matrix(dim, dim, var) @ r


def braid_check(r: AlgMatrix, n_strands: int, dim: int) -> Report:
    """Braid relations for the strand operators built from P R."""
    if n_strands < 3:
        raise ValueError("need at least three strands")
    if dim ** n_strands > BRAID_SPACE_GUARD:
        raise TooLarge(
            f"dim^strands = {dim ** n_strands} exceeds {BRAID_SPACE_GUARD}")
    var = r.entries[0][0].var
    rcheck = braided_rmatrix(r, dim)
    rcheck_inv = rcheck.inverse()
    ident = AlgMatrix.identity(dim, var)

    def sigma(i: int, mat: AlgMatrix) -> AlgMatrix:
        factors = [ident] * (i - 1) + [mat] + [ident] * (n_strands - i - 1)
        return kron_many(*factors)

    report = Report(f"braid relations on {n_strands} strands, dim {dim}")
    sigmas = {i: sigma(i, rcheck) for i in range(1, n_strands)}
    for i in range(1, n_strands - 1):
        left = sigmas[i] @ sigmas[i + 1] @ sigmas[i]
        right = sigmas[i + 1] @ sigmas[i] @ sigmas[i + 1]
        report.check_true(f"s{i} s{i + 1} s{i} = s{i + 1} s{i} s{i + 1}",
                          left == right)
    for i in range(1, n_strands):
        for j in range(i + 2, n_strands):
            report.check_true(f"s{i} s{j} = s{j} s{i}",
                              sigmas[i] @ sigmas[j] == sigmas[j] @ sigmas[i])
    full_ident = AlgMatrix.identity(dim ** n_strands, var)
    for i in range(1, n_strands):
        report.check_true(f"s{i} invertible",
                          sigmas[i] @ sigma(i, rcheck_inv) == full_ident)
    return report
