from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from qgroups import scalars as sc
from qgroups.errors import (
    ConflictingDefinition,
    DivisionByZero,
    IrrationalRadicalLimit,
    PoleAtOne,
    UnsupportedRadicalInverse,
)

q = sc.q_power
s = sc.s_power


def rho2():
    sc.adjoin_radical("rho2", q(1) + q(-1))
    return sc.FieldElement.radical("rho2")


# -- arithmetic examples -----------------------------------------------------

def test_add_example():
    assert (q(1) + q(-1)) + (q(1) - q(-1)) == 2 * q(1)


def test_radical_square_reduces():
    r = rho2()
    assert r * r == q(1) + q(-1)


def test_exact_polynomial_division():
    assert (q(2) - q(-2)) / (q(1) - q(-1)) == q(1) + q(-1)


def test_division_by_zero():
    with pytest.raises(DivisionByZero):
        sc.one() / sc.zero()


def test_multi_term_radical_inverse_unsupported():
    with pytest.raises(UnsupportedRadicalInverse):
        (sc.one() + rho2()).inverse()


def test_radical_monomial_inverse():
    x = (q(1) - q(-1)) * rho2()
    assert x * x.inverse() == sc.one()


# -- classical limits ----------------------------------------------------------

def test_classical_limit_qnumber():
    assert sc.classical_limit((q(3) - q(-3)) / (q(1) - q(-1))) == 3


def test_classical_limit_pole():
    with pytest.raises(PoleAtOne):
        sc.classical_limit(sc.one() / (q(1) - q(-1)))


def test_classical_limit_irrational_radical():
    with pytest.raises(IrrationalRadicalLimit):
        sc.classical_limit(rho2())


def test_h_variable_classical_point_is_zero():
    h = sc.FieldElement.var_power(1, "h")
    assert sc.classical_limit(h ** 2 + 5) == 5


# -- radical registry ------------------------------------------------------------

def test_adjoin_idempotent():
    a = sc.adjoin_radical("rho2", q(1) + q(-1))
    b = sc.adjoin_radical("rho2", q(1) + q(-1))
    assert a.name == b.name and a.square == b.square


def test_adjoin_conflict():
    sc.adjoin_radical("rho2", q(1) + q(-1))
    with pytest.raises(ConflictingDefinition):
        sc.adjoin_radical("rho2", q(1) - q(-1))


def test_sqrt_of_one_plus_qinv2():
    # sqrt(1 + q^-2) realized as rho2 / s
    x = rho2() * s(-1)
    assert x * x == sc.one() + q(-2)


def test_sqrt_of_fraction_factors_into_primes():
    x = sc.sqrt_of_fraction(Fraction(12))
    assert x * x == sc.const(12)
    y = sc.sqrt_of_fraction(Fraction(9, 4))
    assert y == sc.const(Fraction(3, 2))
    z = sc.sqrt_of_fraction(Fraction(6))
    w = sc.sqrt_of_fraction(Fraction(2)) * sc.sqrt_of_fraction(Fraction(3))
    assert z == w


# -- substitutions ------------------------------------------------------------------

def test_subs_inverse_var():
    assert (q(1) - q(-1)).subs_inverse_var() == -(q(1) - q(-1))
    assert (q(1) + q(-1)).subs_inverse_var() == q(1) + q(-1)


def test_eval_numeric_in_q():
    val = (q(1) + q(-1)).eval_numeric(Fraction(7, 10), in_q=True)
    assert val == Fraction(7, 10) + Fraction(10, 7)


# -- field laws (property-based) -------------------------------------------------------

def field_elements():
    rationals = st.fractions(
        min_value=Fraction(-4), max_value=Fraction(4)).filter(
        lambda f: abs(f.denominator) <= 8)

    def build(pairs, with_radical):
        x = sc.zero()
        for coeff, power in pairs:
            x = x + sc.const(coeff) * s(power)
        if with_radical:
            x = x + rho2() * s(1)
        return x

    return st.builds(
        build,
        st.lists(st.tuples(rationals, st.integers(-4, 4)),
                 min_size=0, max_size=3),
        st.booleans())


@settings(max_examples=60, deadline=None)
@given(field_elements(), field_elements(), field_elements())
def test_ring_laws(a, b, c):
    assert a + b == b + a
    assert a * b == b * a
    assert (a + b) + c == a + (b + c)
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a + (-a) == sc.zero()


@settings(max_examples=60, deadline=None)
@given(field_elements())
def test_inverse_round_trip(a):
    if a.is_zero() or len(a.terms) > 1:
        return
    assert a * a.inverse() == sc.one()


@settings(max_examples=60, deadline=None)
@given(field_elements(), field_elements())
def test_classical_limit_is_ring_hom(a, b):
    try:
        la, lb = a.classical_limit(), b.classical_limit()
        lsum = (a + b).classical_limit()
        lprod = (a * b).classical_limit()
    except (PoleAtOne, IrrationalRadicalLimit):
        return
    assert lsum == la + lb
    assert lprod == la * lb


@settings(max_examples=60, deadline=None)
@given(field_elements())
def test_canonical_equality_via_difference(a):
    b = (a + q(1)) - q(1)
    assert b == a
    assert not (a - a)
