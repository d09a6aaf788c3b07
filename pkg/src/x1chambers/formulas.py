"""Closed-form counts for the walls-and-chambers structure and for X_1(N).

These are the oracles the enumeration in :mod:`x1chambers.chamber` and
:mod:`x1chambers.topology` is checked against.  All arithmetic is done with
:class:`fractions.Fraction` and every result is required to be integral:
a non-integral intermediate is a bug, not a rounding issue.
"""

from dataclasses import dataclass, field
from fractions import Fraction

from .arith import _check_natural, divisors, moebius, prime_factors, totient


# levels excepted from the general genus/cusp formula: (genus, cusps, orbifold orders)
EXCEPTIONAL_LEVELS = {
    2: (0, 2, (2,)),
    3: (0, 2, (3,)),
    4: (0, 3, ()),
}


@dataclass(frozen=True)
class ClosedFormCounts:
    a: int
    S: int
    F: int
    CT: int
    DT: int
    CC: int
    C: int


@dataclass(frozen=True)
class CurveInvariants:
    N: int
    genus: int
    cusps: int
    orbifold_orders: tuple = field(default=())


def _exact(value, what):
    value = Fraction(value)
    if value.denominator != 1:
        raise ArithmeticError(f"{what} is not integral: {value}")
    return int(value)


def total_walls(a: int) -> int:
    """Number of walls in all of PH(a,-a), every component together."""
    _check_natural(a)
    if a == 1:
        return 0
    return a // 2 + (a - 1) * (a - 2) // 2


def principal_walls(a: int) -> int:
    """Number of walls in the rotation-number-one component (Moebius inversion)."""
    _check_natural(a)
    return sum(moebius(a // d) * total_walls(d) for d in divisors(a))


def principal_chamber_counts(a: int) -> ClosedFormCounts:
    """Chamber counts of the principal component of PH(a,-a), valid for a >= 4.

    Small strata have chambers with a single boundary component, which
    breaks the double counting behind these formulas; enumerate those
    directly instead.
    """
    _check_natural(a)
    if a < 4:
        raise ValueError(f"closed-form chamber counts need a >= 4, got {a}")
    F = principal_walls(a)
    phi = totient(a)
    DT = _exact(Fraction(F, 2), "DT")
    CC = _exact(Fraction(phi, 2), "CC")
    CT = _exact(Fraction(F, 3) - Fraction(phi, 6), "CT")
    C = _exact(Fraction(5 * F, 6) + Fraction(phi, 3), "C")
    if C != CT + DT + CC:
        raise ArithmeticError(f"chamber total mismatch at a={a}")
    return ClosedFormCounts(a=a, S=total_walls(a), F=F, CT=CT, DT=DT, CC=CC, C=C)


def totient_convolution(N: int) -> int:
    """sum over d | N of phi(d) * phi(N/d)."""
    _check_natural(N)
    return sum(totient(d) * totient(N // d) for d in divisors(N))


def jordan_half(N: int) -> Fraction:
    """(N^2 / 2) * prod over primes p | N of (1 - 1/p^2)."""
    value = Fraction(N * N, 2)
    for p in prime_factors(N):
        value *= 1 - Fraction(1, p * p)
    return value


def _check_level(N):
    _check_natural(N)
    if N < 2:
        raise ValueError(f"level must be >= 2, got {N}")


def cusp_count_formula(N: int) -> int:
    _check_level(N)
    if N in EXCEPTIONAL_LEVELS:
        return EXCEPTIONAL_LEVELS[N][1]
    return _exact(Fraction(totient_convolution(N), 2), "cusp count")


def genus_value(N: int) -> Fraction:
    """Unrounded value of the genus formula for X_1(N)."""
    _check_level(N)
    return 1 + jordan_half(N) / 12 - Fraction(totient_convolution(N), 4)


def genus_formula(N: int) -> CurveInvariants:
    _check_level(N)
    if N in EXCEPTIONAL_LEVELS:
        genus, cusps, orders = EXCEPTIONAL_LEVELS[N]
        return CurveInvariants(N=N, genus=genus, cusps=cusps, orbifold_orders=orders)
    genus = _exact(genus_value(N), "genus")
    if genus < 0:
        raise ArithmeticError(f"negative genus at N={N}")
    return CurveInvariants(N=N, genus=genus, cusps=cusp_count_formula(N))
