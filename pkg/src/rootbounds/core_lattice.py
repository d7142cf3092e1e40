"""Root-lattice arithmetic for the rank-2 symmetric hyperbolic Cartan matrix.

Everything here is exact integer arithmetic.  The Cartan matrix is
``[[2, -r], [-r, 2]]`` with ``r >= 3``; weights are written in the basis of
the two simple roots, so a weight is just a pair of coefficients
``(c0, c1)`` meaning ``c0*alpha0 + c1*alpha1``.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from math import comb, gcd
from typing import NamedTuple


@dataclass(frozen=True)
class Rank2Cartan:
    """The single parameter r defining the Cartan matrix [[2, -r], [-r, 2]]."""

    r: int

    def __post_init__(self) -> None:
        if self.r < 3:
            raise ValueError(f"hyperbolic regime requires r >= 3, got {self.r}")


class Weight(NamedTuple):
    """A point c0*alpha0 + c1*alpha1 of the root lattice."""

    c0: int
    c1: int

    def __add__(self, other):  # type: ignore[override]
        return Weight(self.c0 + other[0], self.c1 + other[1])

    def __sub__(self, other):
        return Weight(self.c0 - other[0], self.c1 - other[1])

    @property
    def height(self) -> int:
        return self.c0 + self.c1


ALPHA0 = Weight(1, 0)
ALPHA1 = Weight(0, 1)


class RootClass(enum.Enum):
    REAL = "real"
    IMAGINARY = "imaginary"
    NOT_A_ROOT = "not_a_root"


def bilinear_form(u, v, cartan: Rank2Cartan) -> int:
    """Symmetric invariant form in simple-root coordinates.

    (u|v) = 2*u0*v0 + 2*u1*v1 - r*(u0*v1 + u1*v0).  Normalized so the
    simple roots have norm 2.
    """
    u0, u1 = u
    v0, v1 = v
    return 2 * u0 * v0 + 2 * u1 * v1 - cartan.r * (u0 * v1 + u1 * v0)


def simple_reflection(i: int, v, cartan: Rank2Cartan) -> tuple[int, int]:
    """Reflect v in simple root alpha_i; coefficients may go negative."""
    if i not in (0, 1):
        raise ValueError(f"simple root index must be 0 or 1, got {i}")
    c0, c1 = v
    if i == 0:
        return (cartan.r * c1 - c0, c1)
    return (c0, cartan.r * c0 - c1)


def classify(v, cartan: Rank2Cartan) -> RootClass:
    """Sort a nonzero nonnegative weight into real root / imaginary root / neither.

    Imaginary means norm <= 0.  A norm-2 weight is a real root exactly
    when repeated height-decreasing simple reflections land on a simple
    root; the descent is attempted rather than assumed to succeed.
    """
    c0, c1 = v
    if (c0, c1) == (0, 0):
        raise ValueError("zero weight has no root class")
    if bilinear_form(v, v, cartan) <= 0:
        return RootClass.IMAGINARY
    if bilinear_form(v, v, cartan) != 2:
        return RootClass.NOT_A_ROOT
    # Weyl descent
    while (c0, c1) not in ((1, 0), (0, 1)):
        stepped = False
        for i in (0, 1):
            n0, n1 = simple_reflection(i, (c0, c1), cartan)
            if n0 >= 0 and n1 >= 0 and n0 + n1 < c0 + c1:
                c0, c1 = n0, n1
                stepped = True
                break
        if not stepped:
            return RootClass.NOT_A_ROOT
    return RootClass.REAL


def dyck_count(n: int, m: int) -> int:
    """Number of lattice paths from (0,0) to (n,m) weakly above the diagonal.

    Closed form binomial(m+n, n) / (m+n), which is an integer exactly
    because gcd(m, n) = 1.
    """
    if n < 1 or m < 1:
        raise ValueError("endpoint coordinates must be positive")
    if gcd(m, n) != 1:
        raise ValueError("count formula requires coprime endpoint")
    q, rem = divmod(comb(m + n, n), m + n)
    assert rem == 0
    return q


def mobius(d: int) -> int:
    """Number-theoretic Moebius function."""
    if d < 1:
        raise ValueError("mobius is defined for positive integers")
    result = 1
    p = 2
    while p * p <= d:
        if d % p == 0:
            d //= p
            if d % p == 0:
                return 0
            result = -result
        p += 1
    if d > 1:
        result = -result
    return result
