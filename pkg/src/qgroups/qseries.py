"""q-numbers, q-factorials, q-shifted factorials and truncated q-series.

Two q-number conventions are supported: the basic number
(1 - q^n)/(1 - q) and the symmetric number (q^n - q^-n)/(q - q^-1).
Series are exposed as partial sums with an explicit truncation order; every
value is an exact element of the coefficient field.
"""

from __future__ import annotations

from math import factorial

from . import scalars as sc
from .errors import PoleInLowerParameter
from .scalars import FieldElement

HEINE = "heine"
SYMMETRIC = "symmetric"


def q_number(n: int, conv: str = SYMMETRIC) -> FieldElement:
    """[n] in the chosen convention, extended to negative n by
    [-n] = -q^-n [n] (heine) and [[-n]] = -[[n]] (symmetric)."""
    if n < 0:
        if conv == HEINE:
            return -(sc.q_power(n) * q_number(-n, conv))
        return -q_number(-n, conv)
    total = sc.zero()
    for k in range(n):
        total = total + (sc.q_power(k) if conv == HEINE
                         else sc.q_power(n - 1 - 2 * k))
    return total


def q_number_base(n: int, base_power: int) -> FieldElement:
    """Basic number (1 - b^n)/(1 - b) for b = q^base_power; 0 means n itself."""
    if base_power == 0:
        return sc.const(n)
    total = sc.zero()
    for k in range(n):
        total = total + sc.q_power(base_power * k)
    return total


def q_factorial(n: int, conv: str = SYMMETRIC) -> FieldElement:
    if n < 0:
        raise ValueError("negative factorial order")
    acc = sc.one()
    for k in range(1, n + 1):
        acc = acc * q_number(k, conv)
    return acc


def q_factorial_base(n: int, base_power: int) -> FieldElement:
    """Factorial of basic numbers in base q^base_power; 0 means ordinary n!."""
    if n < 0:
        raise ValueError("negative factorial order")
    if base_power == 0:
        return sc.const(factorial(n))
    acc = sc.one()
    for k in range(1, n + 1):
        acc = acc * q_number_base(k, base_power)
    return acc


def q_shifted_factorial(x: FieldElement, n: int) -> FieldElement:
    """(x; q)_n = prod_{k<n} (1 - x q^k), with (x; q)_0 = 1."""
    if n < 0:
        raise ValueError("negative order")
    acc = sc.one(x.var)
    for k in range(n):
        acc = acc * (sc.one(x.var) - x * sc.q_power(k))
    return acc


def q_shifted_factorial_multi(xs, n: int) -> FieldElement:
    acc = sc.one()
    for x in xs:
        acc = acc * q_shifted_factorial(x, n)
    return acc


def basic_hypergeometric_partial(a, b, z: FieldElement, N: int) -> FieldElement:
    """Partial sum to order N of the general q-hypergeometric series with
    upper parameters ``a`` and lower parameters ``b``."""
    if N < 0:
        raise ValueError("negative truncation order")
    r, s = len(a), len(b)
    expo = 1 + s - r
    q1 = sc.q_power(1)
    total = sc.zero()
    for n in range(N + 1):
        num = q_shifted_factorial_multi(a, n)
        den = q_shifted_factorial_multi(b, n) * q_shifted_factorial(q1, n)
        if den.is_zero():
            raise PoleInLowerParameter(
                f"lower-parameter factor vanishes at order {n}")
        sign = -1 if (n * expo) % 2 else 1
        twist = sc.q_power((n * (n - 1) // 2) * expo)
        total = total + (num / den) * twist * (z ** n) * sign
    return total


def q_exponential_partial(z: FieldElement, N: int) -> FieldElement:
    """Partial sum sum_{n<=N} z^n / [n]_q! with basic-number factorials."""
    if N < 0:
        raise ValueError("negative truncation order")
    total = sc.zero()
    for n in range(N + 1):
        total = total + (z ** n) / q_factorial(n, HEINE)
    return total
