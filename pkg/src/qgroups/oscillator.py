"""Truncated Fock-space ladder operators for the boson and q-boson algebras,
and the two-oscillator construction of the (deformed) angular momentum
algebra on exact total-number sectors."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from . import qseries as qs
from . import scalars as sc
from .errors import BadDimension, BadSector
from .report import Report
from .reps import SpinRep, spin_rep, sqrt_sym_qnum, symmetric_qnum_of_diagonal
from .scalars import FieldElement
from .tensor import AlgMatrix, kron


def _sqrt_entry(n: int, deformed: bool) -> FieldElement:
    if deformed:
        return sqrt_sym_qnum(n)
    return sc.sqrt_of_fraction(Fraction(n))


@dataclass(frozen=True)
class FockRep:
    """Level-truncated annihilation, creation and number matrices."""

    d: int
    deformed: bool
    amat: AlgMatrix
    adag: AlgMatrix
    nmat: AlgMatrix


def fock_rep(d: int, deformed: bool = True) -> FockRep:
    """Creation acts as sqrt([[n+1]]) (deformed) or sqrt(n+1) (classical) on
    the level below; the top level is annihilated by the truncation."""
    if d < 2:
        raise BadDimension("need at least two levels")
    adag = AlgMatrix.zero(d, d)
    for n in range(d - 1):
        adag.entries[n + 1][n] = _sqrt_entry(n + 1, deformed)
    amat = adag.transpose()
    nmat = AlgMatrix.diagonal([sc.const(n) for n in range(d)])
    return FockRep(d, deformed, amat, adag, nmat)


def verify_qboson(f: FockRep) -> Report:
    """Defining q-boson relations on the interior of the truncation; the top
    level's boundary defect is reported explicitly."""
    report = Report(f"q-boson relations at {f.d} levels")
    d = f.d
    lhs = f.amat @ f.adag - (f.adag @ f.amat).scale(sc.q_power(1))
    qn = AlgMatrix.diagonal([sc.q_power(-n) for n in range(d)])
    interior_ok = all(
        all((lhs.entries[i][n] == qn.entries[i][n]) for i in range(d))
        for n in range(d - 1))
    report.check_true(
        "A A+ - q A+ A = q^-N on levels 0..d-2", interior_ok)
    boundary = lhs.entries[d - 1][d - 1]
    expected = qn.entries[d - 1][d - 1]
    report.check_true(
        f"boundary defect on top level: got {boundary}, untruncated value {expected}",
        boundary != expected)
    com = f.nmat @ f.adag - f.adag @ f.nmat
    report.check_equal("[N, A+] = A+", com, f.adag)
    return report


def verify_boson(f: FockRep) -> Report:
    """Canonical commutator on the interior of a classical truncation."""
    report = Report(f"boson relations at {f.d} levels")
    d = f.d
    com = f.amat @ f.adag - f.adag @ f.amat
    interior_ok = all(
        all(com.entries[i][n] == (sc.one() if i == n else sc.zero())
            for i in range(d))
        for n in range(d - 1))
    report.check_true("[a, a+] = 1 on levels 0..d-2", interior_ok)
    report.check_true(
        "boundary defect on top level",
        com.entries[d - 1][d - 1] != sc.one())
    com_n = f.nmat @ f.adag - f.adag @ f.nmat
    report.check_equal("[N, a+] = a+", com_n, f.adag)
    return report


def hamiltonian_spectrum(d: int, deformed: bool = False) -> list:
    """Diagonal of (a a+ + a+ a)/2 on the truncated space; the last value is
    a truncation artifact (the untruncated interior values are n + 1/2)."""
    f = fock_rep(d, deformed)
    ham = (f.amat @ f.adag + f.adag @ f.amat).scale(sc.const(Fraction(1, 2)))
    return [ham.entries[n][n] for n in range(d)]


# ---------------------------------------------------------------------------
# Two commuting oscillators on a fixed total-number sector
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class SectorRep:
    """Angular-momentum triple on the exact basis |n1, n2> with n1 + n2
    fixed, ordered by descending n1."""

    total: int
    deformed: bool
    j0: AlgMatrix
    jplus: AlgMatrix
    jminus: AlgMatrix

    @property
    def dim(self) -> int:
        return self.total + 1

    def to_spin_rep(self) -> SpinRep:
        return SpinRep(Fraction(self.total, 2), self.j0, self.jplus,
                       self.jminus)


def jordan_schwinger(total: int, deformed: bool = True) -> SectorRep:
    """J+ = A1+ A2, J- = A2+ A1, J0 = (N1 - N2)/2 restricted to the sector;
    the sector construction is exact (no truncation artifacts)."""
    if total < 1:
        raise BadSector("total quantum number must be positive")
    dim = total + 1
    j0 = AlgMatrix.diagonal(
        [sc.const(Fraction(2 * n1 - total, 2))
         for n1 in range(total, -1, -1)])
    jp = AlgMatrix.zero(dim, dim)
    jm = AlgMatrix.zero(dim, dim)
    for idx, n1 in enumerate(range(total, -1, -1)):
        n2 = total - n1
        if n1 < total:  # J+ |n1, n2> = sqrt([n1+1][n2]) |n1+1, n2-1>
            jp.entries[idx - 1][idx] = (_sqrt_entry(n1 + 1, deformed)
                                        * _sqrt_entry(n2, deformed))
        if n1 > 0:
            jm.entries[idx + 1][idx] = (_sqrt_entry(n1, deformed)
                                        * _sqrt_entry(n2 + 1, deformed))
    return SectorRep(total, deformed, j0, jp, jm)


def verify_su_q2(sr: SectorRep, deformed: bool = None) -> Report:
    """Ladder relations, the (q-)commutator of J+ with J-, and the formal
    adjoint pairing of the ladder operators."""
    if deformed is None:
        deformed = sr.deformed
    label = "deformed" if deformed else "classical"
    report = Report(f"angular momentum relations, total={sr.total} ({label})")
    report.check_equal("[J0, J+] = +J+",
                       sr.j0 @ sr.jplus - sr.jplus @ sr.j0, sr.jplus)
    report.check_equal("[J0, J-] = -J-",
                       sr.j0 @ sr.jminus - sr.jminus @ sr.j0, -sr.jminus)
    com = sr.jplus @ sr.jminus - sr.jminus @ sr.jplus
    if deformed:
        report.check_equal("[J+, J-] = [[2J0]]", com,
                           symmetric_qnum_of_diagonal(sr.j0))
    else:
        report.check_equal("[J+, J-] = 2J0", com, sr.j0.scale(sc.const(2)))
    report.check_equal("J+ transpose = J-", sr.jplus.transpose(), sr.jminus)
    return report


# ---------------------------------------------------------------------------
# Sector structure inside the full two-oscillator space
# ---------------------------------------------------------------------------

def two_oscillator_ladders(d: int, deformed: bool = True) -> tuple:
    """J+/J- on the full truncated product space of two commuting copies."""
    f = fock_rep(d, deformed)
    ident = AlgMatrix.identity(d)
    jp = kron(f.adag, ident) @ kron(ident, f.amat)
    jm = kron(ident, f.adag) @ kron(f.amat, ident)
    return jp, jm


def sector_embedding_check(total: int, deformed: bool = True) -> Report:
    """The full-space ladder operators preserve total occupation and restrict
    on the sector basis to the exact sector matrices."""
    report = Report(f"sector embedding, total={total}")
    d = total + 1
    jp, jm = two_oscillator_ladders(d, deformed)
    sr = jordan_schwinger(total, deformed)

    def tot(idx):
        return idx // d + idx % d

    block_ok = all(
        jmat.entries[i][j].is_zero()
        for jmat in (jp, jm)
        for i in range(d * d) for j in range(d * d)
        if tot(i) != tot(j))
    report.check_true("ladders preserve the total occupation number", block_ok)

    sector = [n1 * d + (total - n1) for n1 in range(total, -1, -1)]
    restricted_p = AlgMatrix([[jp.entries[i][j] for j in sector]
                              for i in sector])
    restricted_m = AlgMatrix([[jm.entries[i][j] for j in sector]
                              for i in sector])
    report.check_equal("restriction of J+ matches the sector matrix",
                       restricted_p, sr.jplus)
    report.check_equal("restriction of J- matches the sector matrix",
                       restricted_m, sr.jminus)
    return report


def classical_specialization_matrix(m: AlgMatrix) -> AlgMatrix:
    return m.map_entries(lambda c: c.classical_specialization())
