"""Finite-dimensional representations of the deformed enveloping algebra of
sl(2), with the universal T- and R-matrices evaluated through nilpotency-
truncated (q-)exponential series, and the triangular L-matrix realizations."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from . import ncalg as nc
from . import qseries as qs
from . import scalars as sc
from .errors import (
    NegativeSpin,
    NonDiagonalX0,
    NotNilpotent,
)
from .ncalg import NCPolynomial, RewriteSystem
from .report import Report
from .scalars import FieldElement
from .tensor import AlgMatrix, kron


@dataclass(frozen=True)
class SpinRep:
    """Spin-j triple (X0, X+, X-) over the scalar field."""

    j: Fraction
    x0: AlgMatrix
    xplus: AlgMatrix
    xminus: AlgMatrix

    @property
    def dim(self) -> int:
        return int(2 * self.j) + 1

    def weights(self) -> list:
        """Diagonal entries of X0 as fractions, descending."""
        return [self.j - k for k in range(self.dim)]

    def q_power_x0(self, sign: int = 1) -> AlgMatrix:
        """Diagonal matrix of q^(sign * m) over the X0 eigenvalues."""
        return AlgMatrix.diagonal(
            [sc.s_power(int(2 * sign * m)) for m in self.weights()])


def sqrt_sym_qnum(n: int) -> FieldElement:
    """Square root of the symmetric q-number [[n]] as a field element."""
    if n < 0:
        raise ValueError("negative q-number under a square root")
    if n == 0:
        return sc.zero()
    if n == 1:
        return sc.one()
    name = f"rho{n}"
    sc.adjoin_radical(name, qs.q_number(n))
    return sc.FieldElement.radical(name)


def spin_rep(j) -> SpinRep:
    """Spin-j matrices; the two smallest spins match the standard forms and
    the ladder entries carry q-power weights interpolating them."""
    j = Fraction(j)
    if j < 0 or (2 * j).denominator != 1:
        raise NegativeSpin(f"spin must be a nonnegative half-integer, got {j}")
    dim = int(2 * j) + 1
    ms = [j - k for k in range(dim)]
    x0 = AlgMatrix.diagonal([sc.const(m) for m in ms])
    xp = AlgMatrix.zero(dim, dim)
    xm = AlgMatrix.zero(dim, dim)
    for col, m in enumerate(ms):
        if m < j:  # raising entry, column m -> row m+1
            coeff = (sqrt_sym_qnum(int(j - m)) * sqrt_sym_qnum(int(j + m + 1))
                     * sc.s_power(-int(2 * m + 1)))
            xp.entries[col - 1][col] = coeff
        if m > -j:  # lowering entry, column m -> row m-1
            coeff = (sqrt_sym_qnum(int(j + m)) * sqrt_sym_qnum(int(j - m + 1))
                     * sc.s_power(int(2 * m - 1)))
            xm.entries[col + 1][col] = coeff
    return SpinRep(j, x0, xp, xm)


def symmetric_qnum_of_diagonal(m: AlgMatrix, factor: int = 2) -> AlgMatrix:
    """[[factor * M]] for a diagonal M with half-integer entries, spectrally."""
    if not m.is_diagonal():
        raise NonDiagonalX0("spectral q-number needs a diagonal matrix")
    out = []
    for i in range(m.rows):
        val = m.entries[i][i].is_rational()
        if val is None or (factor * val).denominator != 1:
            raise NonDiagonalX0("diagonal entries must be half-integers")
        out.append(qs.q_number(int(factor * val)))
    return AlgMatrix.diagonal(out)


def verify_slq2(rep: SpinRep) -> Report:
    """Exact check of the deformed sl(2) relations and the q <-> 1/q symmetry."""
    report = Report(f"slq2 relations at j={rep.j}")
    com0p = rep.x0 @ rep.xplus - rep.xplus @ rep.x0
    com0m = rep.x0 @ rep.xminus - rep.xminus @ rep.x0
    compm = rep.xplus @ rep.xminus - rep.xminus @ rep.xplus
    report.check_equal("[X0, X+] = +X+", com0p, rep.xplus)
    report.check_equal("[X0, X-] = -X-", com0m, -rep.xminus)
    qnum = symmetric_qnum_of_diagonal(rep.x0)
    report.check_equal("[X+, X-] = [[2X0]]", compm, qnum)
    flipped = qnum.map_entries(lambda c: c.subs_inverse_var())
    report.check_equal("[[2X0]] symmetric under q <-> 1/q", qnum, flipped)
    return report


# ---------------------------------------------------------------------------
# Nilpotent series
# ---------------------------------------------------------------------------

def nilpotent_powers(m: AlgMatrix) -> list:
    """[I, M, M^2, ...] up to the nilpotency index; raises otherwise."""
    if m.rows != m.cols:
        raise NotNilpotent("nilpotency needs a square matrix")
    sample = m.entries[0][0]
    var = sample.var if isinstance(sample, FieldElement) else sample.var
    if isinstance(sample, FieldElement):
        ident = AlgMatrix.identity(m.rows, var)
    else:
        ident = AlgMatrix.identity(m.rows, var).map_entries(
            lambda c: NCPolynomial({(): c}, var))
    powers = [ident]
    cur = ident
    for _ in range(m.rows):
        cur = cur @ m
        if cur.is_zero():
            return powers
        powers.append(cur)
    raise NotNilpotent("matrix is not nilpotent")


def q_exponential_of_nilpotent(m: AlgMatrix, base: str = "classical") -> AlgMatrix:
    """Sum of M^n / [n]! with basic-number factorials in the given base
    ("q2", "q-2" or "classical"), truncated by nilpotency."""
    base_power = {"q2": 2, "q-2": -2, "classical": 0}[base]
    powers = nilpotent_powers(m)
    acc = powers[0]
    for n in range(1, len(powers)):
        fact = qs.q_factorial_base(n, base_power)
        acc = acc + powers[n].scale(fact.inverse())
    return acc


# ---------------------------------------------------------------------------
# Universal T
# ---------------------------------------------------------------------------

def _param_poly(coeff: FieldElement, word: tuple) -> NCPolynomial:
    return NCPolynomial({word: coeff}, "s")


def _e_power(k: int) -> tuple:
    return ("E",) * k if k >= 0 else ("Einv",) * (-k)


def universal_t(rep: SpinRep) -> AlgMatrix:
    """Exponential-coordinate T-matrix of the representation, with entries in
    the noncommuting parameter algebra."""
    if not rep.x0.is_diagonal():
        raise NonDiagonalX0("universal T needs diagonal X0")
    pa = nc.make_preset("parameter_algebra")
    gamma_xm = rep.xminus.map_entries(
        lambda c: _param_poly(c, ("gamma",)) if not c.is_zero()
        else NCPolynomial.zero())
    beta_xp = rep.xplus.map_entries(
        lambda c: _param_poly(c, ("beta",)) if not c.is_zero()
        else NCPolynomial.zero())
    left = q_exponential_of_nilpotent(gamma_xm, "q-2")
    right = q_exponential_of_nilpotent(beta_xp, "q2")
    diag_entries = []
    for m in rep.weights():
        if (2 * m).denominator != 1:
            raise NonDiagonalX0("weights must be half-integers")
        diag_entries.append(_param_poly(sc.one(), _e_power(int(2 * m))))
    middle = AlgMatrix.diagonal([sc.one()] * rep.dim).map_entries(
        lambda c: NCPolynomial.zero())
    for i in range(rep.dim):
        middle.entries[i][i] = diag_entries[i]
    product = left @ middle @ right
    return product.map_entries(pa.normal_form)


def parameter_image(target: RewriteSystem) -> dict:
    """Images of the quantum-matrix entries in the parameter algebra."""
    e = NCPolynomial.gen("E")
    einv = NCPolynomial.gen("Einv")
    beta = NCPolynomial.gen("beta")
    gamma = NCPolynomial.gen("gamma")
    return {
        "A": target.normal_form(e),
        "B": target.normal_form(e * beta),
        "C": target.normal_form(gamma * e),
        "D": target.normal_form(einv + gamma * e * beta),
    }


def substitute_generators(p: NCPolynomial, images: dict,
                          target: RewriteSystem) -> NCPolynomial:
    out = NCPolynomial.zero(p.var)
    for word, coeff in p.terms.items():
        term = NCPolynomial.scalar(coeff)
        for g in word:
            term = term * images[g]
        out = out + term
    return target.normal_form(out)


def universal_t_vs_t1_check() -> Report:
    """The parameter images of the 3-dimensional quantum-matrix entries agree
    entrywise with the universal T evaluated at spin 1."""
    from .hopf import three_dim_t_matrix

    pa = nc.make_preset("parameter_algebra")
    images = parameter_image(pa)
    t1 = three_dim_t_matrix()
    direct = universal_t(spin_rep(1))
    report = Report("universal T vs 3-dimensional matrix")
    for i in range(3):
        for j in range(3):
            substituted = substitute_generators(t1.entries[i][j], images, pa)
            report.check_equal(
                f"entry ({i + 1},{j + 1})",
                nc.render_ncpoly(substituted, pa),
                nc.render_ncpoly(pa.normal_form(direct.entries[i][j]), pa))
    return report


# ---------------------------------------------------------------------------
# Universal R
# ---------------------------------------------------------------------------

def universal_r(rep1: SpinRep, rep2: SpinRep) -> AlgMatrix:
    """Representation image of the universal R-matrix.

    The leading diagonal carries q^(2 m1 m2); the series in
    (q^X0 X+) (x) (q^-X0 X-) truncates by nilpotency, with coefficients
    (1 - q^-2)^n q^(n(n-1)/2) / [[n]]!.
    """
    for rep in (rep1, rep2):
        if not rep.x0.is_diagonal():
            raise NonDiagonalX0("universal R needs diagonal X0")
    lead_entries = []
    for m1 in rep1.weights():
        for m2 in rep2.weights():
            lead_entries.append(sc.s_power(int(4 * m1 * m2)))
    lead = AlgMatrix.diagonal(lead_entries)
    step = kron(rep1.q_power_x0(1) @ rep1.xplus,
                rep2.q_power_x0(-1) @ rep2.xminus)
    powers = nilpotent_powers(step)
    series = powers[0]
    one_minus = sc.one() - sc.q_power(-1) ** 2
    for n in range(1, len(powers)):
        coeff = ((one_minus ** n) / qs.q_factorial(n, qs.SYMMETRIC)
                 * sc.q_power(n * (n - 1) // 2))
        series = series + powers[n].scale(coeff)
    return lead @ series


def fundamental_rmatrix() -> AlgMatrix:
    """The 4x4 R-matrix of the half-spin pair."""
    half = spin_rep(Fraction(1, 2))
    return universal_r(half, half)


# ---------------------------------------------------------------------------
# L-matrices
# ---------------------------------------------------------------------------

def l_matrices(rep: SpinRep) -> tuple:
    """Upper and lower triangular T-matrix realizations, flattened to
    (2*dim)-square matrices with the auxiliary slot outermost."""
    if not rep.x0.is_diagonal():
        raise NonDiagonalX0("L-matrices need diagonal X0")
    d = rep.dim
    lam = sc.q_power(1) - sc.q_power(-1)
    qx0 = rep.q_power_x0(1)
    qx0_inv = rep.q_power_x0(-1)
    zero_block = AlgMatrix.zero(d, d)
    lplus_blocks = [[qx0_inv, rep.xminus.scale(-(sc.s_power(1) * lam))],
                    [zero_block, qx0]]
    lminus_blocks = [[qx0, zero_block],
                     [rep.xplus.scale(sc.s_power(-1) * lam), qx0_inv]]
    return _from_blocks(lplus_blocks), _from_blocks(lminus_blocks)


def _from_blocks(blocks) -> AlgMatrix:
    brows = len(blocks)
    bcols = len(blocks[0])
    d = blocks[0][0].rows
    out = []
    for bi in range(brows):
        for i in range(d):
            row = []
            for bj in range(bcols):
                row.extend(blocks[bi][bj].entries[i])
            out.append(row)
    return AlgMatrix(out)


def aux_blocks(l: AlgMatrix, dim: int) -> list:
    """Split a (2*dim)-square L-matrix back into its 2x2 auxiliary blocks."""
    out = []
    for bi in range(2):
        row = []
        for bj in range(2):
            row.append(AlgMatrix(
                [[l.entries[bi * dim + i][bj * dim + j] for j in range(dim)]
                 for i in range(dim)]))
        out.append(row)
    return out
