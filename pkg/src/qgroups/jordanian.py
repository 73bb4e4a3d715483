"""The h-deformation: matrix-algebra checks over Q(h) and the deformed
enveloping-algebra relations and coproducts at the fundamental
representation, with all power series truncated by nilpotency."""

from __future__ import annotations

from fractions import Fraction

from . import hopf
from . import ncalg as nc
from . import scalars as sc
from .errors import NotNilpotent
from .report import Report
from .reps import nilpotent_powers
from .tensor import AlgMatrix, kron


def _h(k: int = 1) -> sc.FieldElement:
    return sc.FieldElement.var_power(k, "h")


def _const(value) -> sc.FieldElement:
    return sc.FieldElement.const(value, "h")


# ---------------------------------------------------------------------------
# Matrix power series by nilpotency truncation
# ---------------------------------------------------------------------------

def _series(m: AlgMatrix, coeff_of_order) -> AlgMatrix:
    """Sum coeff_of_order(n) * M^n over the nilpotency range of M."""
    powers = nilpotent_powers(m)
    acc = None
    for n, p in enumerate(powers):
        c = coeff_of_order(n)
        if c.is_zero():
            continue
        term = p.scale(c)
        acc = term if acc is None else acc + term
    if acc is None:
        raise NotNilpotent("empty series")
    return acc


def matrix_exp(m: AlgMatrix) -> AlgMatrix:
    from math import factorial
    var = m.entries[0][0].var
    return _series(m, lambda n: sc.FieldElement.const(
        Fraction(1, factorial(n)), var))


def matrix_sinh_over(m: AlgMatrix, divisor: sc.FieldElement) -> AlgMatrix:
    """sinh(M)/divisor where M = divisor * X keeps all entries polynomial."""
    from math import factorial
    var = m.entries[0][0].var

    def coeff(n):
        if n % 2 == 0:
            return sc.zero(var)
        return sc.FieldElement.const(Fraction(1, factorial(n)), var)

    return _series(m, coeff).scale(divisor.inverse())


def matrix_cosh(m: AlgMatrix) -> AlgMatrix:
    from math import factorial
    var = m.entries[0][0].var

    def coeff(n):
        if n % 2 == 1:
            return sc.zero(var)
        return sc.FieldElement.const(Fraction(1, factorial(n)), var)

    return _series(m, coeff)


# ---------------------------------------------------------------------------
# Matrix-algebra side
# ---------------------------------------------------------------------------

def fun_h_checks() -> Report:
    """Coproduct homomorphism, centrality and group-likeness of the
    determinant element for the h-deformed matrix algebra."""
    rs = nc.make_preset("fun_h_sl2")
    cm = hopf.matrix_coproduct_map(rs)
    report = Report("h-deformed matrix algebra")
    report.extend(hopf.homomorphism_check(cm, rs), prefix="homomorphism: ")
    det = nc.jordanian_determinant()
    report.check_true("determinant element is central",
                      nc.centrality_check(det, rs))
    report.extend(hopf.group_like_check(det, cm, rs, "det_h"))
    report.extend(hopf.coassociativity_check(cm, rs), prefix="")
    return report


# ---------------------------------------------------------------------------
# Enveloping-algebra side at the fundamental representation
# ---------------------------------------------------------------------------

def _fundamental_matrices() -> tuple:
    x0 = AlgMatrix.diagonal([_const(Fraction(1, 2)), _const(Fraction(-1, 2))])
    xp = AlgMatrix.zero(2, 2, "h")
    xp.entries[0][1] = sc.one("h")
    xm = AlgMatrix.zero(2, 2, "h")
    xm.entries[1][0] = sc.one("h")
    return x0, xp, xm


def _uh_relations(report: Report, x0, xp, xm) -> None:
    """The three deformed relations, with sinh(h X+)/h and cosh(h X+)
    evaluated as nilpotency-truncated series."""
    h = _h()
    hxp = xp.scale(h)
    sinh_term = matrix_sinh_over(hxp, h)
    cosh_term = matrix_cosh(hxp)
    report.check_equal("[X0, X+] = sinh(h X+)/h",
                       x0 @ xp - xp @ x0, sinh_term)
    anticom = (xm @ cosh_term + cosh_term @ xm).scale(_const(Fraction(-1, 2)))
    report.check_equal("[X0, X-] = -(X- cosh(h X+) + cosh(h X+) X-)/2",
                       x0 @ xm - xm @ x0, anticom)
    report.check_equal("[X+, X-] = 2 X0",
                       xp @ xm - xm @ xp, x0.scale(_const(2)))


def uh_fundamental_check() -> Report:
    """Deformed enveloping-algebra relations hold for the classical 2x2
    matrices (the series truncate at once since X+ squares to zero)."""
    report = Report("h-deformed enveloping algebra, fundamental matrices")
    x0, xp, xm = _fundamental_matrices()
    report.check_true("X+^2 = 0 truncates the series", (xp @ xp).is_zero())
    _uh_relations(report, x0, xp, xm)
    return report


def uh_coproduct_check() -> Report:
    """The twisted coproduct images satisfy the same relations on the
    4-dimensional space over Q(h)."""
    report = Report("h-deformed coproduct")
    x0, xp, xm = _fundamental_matrices()
    h = _h()
    ident = AlgMatrix.identity(2, "h")
    e_plus = matrix_exp(xp.scale(h))
    e_minus = matrix_exp(xp.scale(-h))
    dxp = kron(xp, ident) + kron(ident, xp)
    dxm = kron(xm, e_plus) + kron(e_minus, xm)
    dx0 = kron(x0, e_plus) + kron(e_minus, x0)

    cube = dxp @ dxp @ dxp
    report.check_true("(DX+)^3 = 0 on the doubled space", cube.is_zero())
    expected_cosh = (AlgMatrix.identity(4, "h")
                     + kron(xp, xp).scale(h * h))
    report.check_equal("cosh(h DX+) = 1 + h^2 X+ (x) X+",
                       matrix_cosh(dxp.scale(h)), expected_cosh)
    report.check_equal("sinh(h DX+)/h = DX+",
                       matrix_sinh_over(dxp.scale(h), h), dxp)
    _uh_relations(report, dx0, dxp, dxm)
    return report


def uh_classical_limit_check() -> Report:
    """At h = 0 the coproduct images collapse to the primitive ones."""
    report = Report("h -> 0 limit of the twisted coproduct")
    x0, xp, xm = _fundamental_matrices()
    ident = AlgMatrix.identity(2, "h")
    h = _h()
    e_plus = matrix_exp(xp.scale(h))
    e_minus = matrix_exp(xp.scale(-h))
    for name, x, dx in (
            ("X0", x0, kron(x0, e_plus) + kron(e_minus, x0)),
            ("X+", xp, kron(xp, ident) + kron(ident, xp)),
            ("X-", xm, kron(xm, e_plus) + kron(e_minus, xm))):
        classical = dx.map_entries(lambda c: c.classical_specialization())
        primitive = kron(x, ident) + kron(ident, x)
        report.check_equal(f"limit Delta({name}) is primitive",
                           classical, primitive)
    return report
