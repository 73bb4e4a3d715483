"""Coproduct machinery: the matrix comultiplication, representation-property
and covariance checks, and the coproducts of the deformed sl(2) realized on
finite-dimensional representations."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from . import ncalg as nc
from . import scalars as sc
from .errors import NonDiagonalX0, SingularR, UnknownGenerator
from .ncalg import NCPolynomial, RewriteSystem
from .report import Report
from .reps import SpinRep, symmetric_qnum_of_diagonal
from .tensor import AlgMatrix, TensorElement, dotted_tensor, kron, matrix_slot_flip


@dataclass(frozen=True)
class CoproductMap:
    """Generator images in the two-slot tensor algebra, extended
    multiplicatively and linearly."""

    images: dict
    systems: tuple

    def image(self, gen: str) -> TensorElement:
        if gen not in self.images:
            raise UnknownGenerator(f"no coproduct image for {gen!r}")
        return self.images[gen]


def matrix_coproduct_map(rs: RewriteSystem) -> CoproductMap:
    """The comultiplication dual to 2x2 matrix multiplication, identical for
    the q- and h-deformed matrix algebras."""
    systems = (rs, rs)

    def pure(u, v):
        return TensorElement.pure(systems, NCPolynomial.gen(u, rs.var),
                                  NCPolynomial.gen(v, rs.var))

    images = {
        "A": pure("A", "A") + pure("B", "C"),
        "B": pure("A", "B") + pure("B", "D"),
        "C": pure("C", "A") + pure("D", "C"),
        "D": pure("C", "B") + pure("D", "D"),
    }
    return CoproductMap(images, systems)


def coproduct(p: NCPolynomial, cm: CoproductMap,
              rs: RewriteSystem) -> TensorElement:
    """Multiplicative-linear extension of the generator images."""
    out = TensorElement.zero(cm.systems)
    for word, coeff in p.terms.items():
        term = TensorElement.unit(cm.systems).scale(coeff)
        for g in word:
            term = term * cm.image(g)
        out = out + term
    return out


def homomorphism_check(cm: CoproductMap, rs: RewriteSystem) -> Report:
    """The coproduct respects every defining relation of the algebra."""
    report = Report(f"coproduct homomorphism on {rs.name}")
    for label, lhs, rhs in rs.relations():
        left = coproduct(lhs, cm, rs)
        right = coproduct(rhs, cm, rs)
        report.check_equal(f"Delta({label})", left, right)
    return report


def coassociativity_check(cm: CoproductMap, rs: RewriteSystem) -> Report:
    """(Delta (x) id) Delta = (id (x) Delta) Delta on the generators."""
    systems3 = (rs, rs, rs)
    report = Report(f"coassociativity on {rs.name}")

    def expand(word) -> TensorElement:
        term = TensorElement.unit(cm.systems)
        for g in word:
            term = term * cm.image(g)
        return term

    for g in cm.images:
        base = cm.image(g)
        left = TensorElement.zero(systems3)
        right = TensorElement.zero(systems3)
        for (w1, w2), c in base.terms.items():
            inner = expand(w1)
            for (u, v), c2 in inner.terms.items():
                left = left + TensorElement(
                    systems3, {(u, v, w2): c * c2}, normalize=False)
            inner = expand(w2)
            for (u, v), c2 in inner.terms.items():
                right = right + TensorElement(
                    systems3, {(w1, u, v): c * c2}, normalize=False)
        report.check_equal(f"coassoc({g})", left, right)
    return report


def group_like_check(p: NCPolynomial, cm: CoproductMap,
                     rs: RewriteSystem, label: str) -> Report:
    report = Report(f"group-likeness of {label}")
    left = coproduct(p, cm, rs)
    right = TensorElement.pure(cm.systems, rs.normal_form(p),
                               rs.normal_form(p))
    report.check_equal(f"Delta({label}) = {label}(x){label}", left, right)
    return report


# ---------------------------------------------------------------------------
# Matrix representations of the deformed matrix algebra
# ---------------------------------------------------------------------------

def fundamental_t_matrix(var: str = "s") -> AlgMatrix:
    g = NCPolynomial.gen
    return AlgMatrix([[g("A", var), g("B", var)], [g("C", var), g("D", var)]])


def three_dim_t_matrix() -> AlgMatrix:
    """Three-dimensional representation of the quantum matrix algebra; the
    off-corner entries carry sqrt(1 + q^-2) = rho2/s with rho2^2 = [[2]]."""
    from . import qseries as qs

    sc.adjoin_radical("rho2", qs.q_number(2))
    c = sc.FieldElement.radical("rho2") * sc.s_power(-1)
    g = NCPolynomial.gen
    w = NCPolynomial.word
    entries = [
        [w("AA"), w("AB", c), w("BB")],
        [w("AC", c), w("AD") + w("BC", sc.q_power(-1)), w("BD", c)],
        [w("CC"), w("CD", c), w("DD")],
    ]
    return AlgMatrix(entries)


def rep_property_check(tcand: AlgMatrix, cm: CoproductMap,
                       rs: RewriteSystem) -> Report:
    """(T dotted-tensor T)[i, j] equals the coproduct of T[i, j]."""
    report = Report("representation property")
    n = tcand.rows
    dt = dotted_tensor(tcand, tcand, cm.systems)
    for i in range(n):
        for j in range(n):
            left = dt.entries[i][j]
            right = coproduct(rs.normal_form(tcand.entries[i][j]), cm, rs)
            report.check_equal(f"entry ({i + 1},{j + 1})", left, right)
    return report


# ---------------------------------------------------------------------------
# Coproducts of the deformed sl(2) on representations
# ---------------------------------------------------------------------------

def uq_coproduct_rep(rep1: SpinRep, variant: str = "q",
                     rep2: Optional[SpinRep] = None) -> tuple:
    """Kronecker matrices of (Delta(X0), Delta(X+), Delta(X-)).

    The ``q_inverse`` variant swaps q and 1/q, which exchanges the q-power
    dressing of the two slots.
    """
    if rep2 is None:
        rep2 = rep1
    for rep in (rep1, rep2):
        if not rep.x0.is_diagonal():
            raise NonDiagonalX0("coproduct needs diagonal X0")
    sign = {"q": 1, "q_inverse": -1}[variant]
    i1 = AlgMatrix.identity(rep1.dim)
    i2 = AlgMatrix.identity(rep2.dim)
    dx0 = kron(rep1.x0, i2) + kron(i1, rep2.x0)
    dxp = (kron(rep1.xplus, rep2.q_power_x0(sign))
           + kron(rep1.q_power_x0(-sign), rep2.xplus))
    dxm = (kron(rep1.xminus, rep2.q_power_x0(sign))
           + kron(rep1.q_power_x0(-sign), rep2.xminus))
    return dx0, dxp, dxm


def uq_coproduct_algebra_check(rep: SpinRep, variant: str = "q",
                               rep2: Optional[SpinRep] = None) -> Report:
    """The coproduct images satisfy the deformed sl(2) relations."""
    other = rep if rep2 is None else rep2
    report = Report(
        f"coproduct algebra relations at j={rep.j} (x) j={other.j}, {variant}")
    dx0, dxp, dxm = uq_coproduct_rep(rep, variant, rep2)
    report.check_equal("[DX0, DX+] = +DX+", dx0 @ dxp - dxp @ dx0, dxp)
    report.check_equal("[DX0, DX-] = -DX-", dx0 @ dxm - dxm @ dx0, -dxm)
    qnum = symmetric_qnum_of_diagonal(dx0)
    report.check_equal("[DX+, DX-] = [[2DX0]]", dxp @ dxm - dxm @ dxp, qnum)
    return report


def opposite_coproduct_checks(rep: SpinRep) -> Report:
    """Slot flip sends the coproduct to its q <-> 1/q opposite, and the two
    differ for formal q."""
    report = Report(f"opposite coproduct at j={rep.j}")
    d = rep.dim
    _, dxp_q, dxm_q = uq_coproduct_rep(rep, "q")
    _, dxp_qi, dxm_qi = uq_coproduct_rep(rep, "q_inverse")
    report.check_equal("flip(Dq(X+)) = Dq^-1(X+)",
                       matrix_slot_flip(dxp_q, d, d), dxp_qi)
    report.check_equal("flip(Dq(X-)) = Dq^-1(X-)",
                       matrix_slot_flip(dxm_q, d, d), dxm_qi)
    report.check_true("Dq(X+) != flip(Dq(X+)) for formal q",
                      matrix_slot_flip(dxp_q, d, d) != dxp_q)
    return report


def intertwiner_check(rep1: SpinRep, rep2: SpinRep, r: AlgMatrix) -> Report:
    """R conjugates the coproduct into the opposite coproduct."""
    report = Report(f"intertwiner at j={rep1.j} (x) j={rep2.j}")
    if r.rows != rep1.dim * rep2.dim:
        raise SingularR("R has the wrong size for this pair")
    rinv = r.inverse()
    direct = uq_coproduct_rep(rep1, "q", rep2)
    opposite = uq_coproduct_rep(rep1, "q_inverse", rep2)
    for name, d, o in zip(("X0", "X+", "X-"), direct, opposite):
        report.check_equal(f"R Dq({name}) R^-1 = Dq^-1({name})",
                           r @ d @ rinv, o)
    return report


# ---------------------------------------------------------------------------
# Covariance of the plane calculus under the quantum matrix coaction
# ---------------------------------------------------------------------------

def covariance_check(transformation: Optional[dict] = None,
                     project_out=()) -> Report:
    """The primed coordinates and derivatives satisfy the plane calculus.

    The matrix entries commute with the coordinates and the derivatives; the
    unit quantum determinant is imposed on every residue.  The derivative row
    uses the inverse-transpose with the q-powers fixed by consistency:
    dX' = D dX - (1/q) C dY and dY' = -q B dX + A dY.

    ``project_out`` names matrix entries set to zero after reduction, for
    checks restricted to a subgroup (e.g. the diagonal one).
    """
    rs = nc.combined_covariance_system()
    var = rs.var
    g = lambda name: NCPolynomial.gen(name, var)
    q = sc.q_power

    if transformation is None:
        transformation = {
            "X": g("A") * g("X") + g("B") * g("Y"),
            "Y": g("C") * g("X") + g("D") * g("Y"),
            "dX": g("D") * g("dX") - g("C").scale(q(-1)) * g("dY"),
            "dY": -(g("B").scale(q(1))) * g("dX") + g("A") * g("dY"),
        }
    xp, yp = transformation["X"], transformation["Y"]
    dxp, dyp = transformation["dX"], transformation["dY"]

    one = NCPolynomial.unit(var)
    relations = [
        ("X'Y' = q Y'X'", xp * yp - yp * xp.scale(q(1))),
        ("dX'dY' = (1/q) dY'dX'", dxp * dyp - dyp * dxp.scale(q(-1))),
        ("dX'Y' = q Y'dX'", dxp * yp - yp * dxp.scale(q(1))),
        ("dY'X' = q X'dY'", dyp * xp - xp * dyp.scale(q(1))),
        ("dX'X' - q^2 X'dX' = 1 + (q^2-1) Y'dY'",
         dxp * xp - xp * dxp.scale(q(2)) - one - (yp * dyp).scale(q(2) - 1)),
        ("dY'Y' - q^2 Y'dY' = 1", dyp * yp - yp * dyp.scale(q(2)) - one),
    ]
    report = Report("covariance of the plane calculus")
    report.note("matrix entries commute with coordinates and derivatives; "
                "unit determinant imposed on residues")
    for name, residue in relations:
        reduced = nc.impose_unit_determinant(rs.normal_form(residue), rs)
        if project_out:
            reduced = nc.set_generators_to_zero(reduced, project_out)
        report.add(name, nc.render_ncpoly(reduced, rs), "0", reduced.is_zero())
    return report
