"""Exact root multiplicities via Peterson's recursion, plus the Kostant
partition counter used as an independent cross-check of conventions.

The recursion computes auxiliary rationals c_beta over the whole lower box
of the target weight in height order; multiplicities then follow by
Moebius inversion over the divisors of the weight.  All arithmetic is
exact (Fraction / arbitrary-precision int).
"""

from __future__ import annotations

import csv
from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd
from typing import Optional, TextIO

from .core_lattice import Rank2Cartan, RootClass, Weight, bilinear_form, classify, mobius

# reduced-to-lowest-terms invariant comes with the stdlib type
ExactRational = Fraction


@dataclass
class MultiplicityTable:
    """Memoized (c, mult) entries over a growing lower box, filled in height order."""

    cartan: Rank2Cartan
    entries: dict[Weight, tuple[Fraction, int]] = field(default_factory=dict)
    _box: tuple[int, int] = (0, 0)

    @property
    def r(self) -> int:
        return self.cartan.r

    def fill_box(self, c0max: int, c1max: int) -> None:
        if c0max <= self._box[0] and c1max <= self._box[1]:
            return
        c0max = max(c0max, self._box[0])
        c1max = max(c1max, self._box[1])
        r = self.cartan.r
        cvals: dict[tuple[int, int], Fraction] = {
            (w.c0, w.c1): c for w, (c, _) in self.entries.items()
        }
        for h in range(1, c0max + c1max + 1):
            for a0 in range(max(0, h - c1max), min(c0max, h) + 1):
                a1 = h - a0
                if (a0, a1) in cvals:
                    continue
                self._compute(a0, a1, cvals, r)
        self._box = (c0max, c1max)

    def _compute(self, a0: int, a1: int, cvals, r: int) -> None:
        if (a0, a1) in ((1, 0), (0, 1)):
            cvals[(a0, a1)] = Fraction(1)
            self.entries[Weight(a0, a1)] = (Fraction(1), 1)
            return
        num = Fraction(0)
        for b0 in range(a0 + 1):
            for b1 in range(a1 + 1):
                if (b0, b1) == (0, 0) or (b0, b1) == (a0, a1):
                    continue
                cb = cvals[(b0, b1)]
                if not cb:
                    continue
                cc = cvals[(a0 - b0, a1 - b1)]
                if not cc:
                    continue
                num += (
                    2 * b0 * (a0 - b0)
                    + 2 * b1 * (a1 - b1)
                    - r * (b0 * (a1 - b1) + b1 * (a0 - b0))
                ) * cb * cc
        norm = 2 * a0 * a0 + 2 * a1 * a1 - 2 * r * a0 * a1
        denom = norm - 2 * (a0 + a1)
        g = gcd(a0, a1)
        imprimitive = sum(
            (
                Fraction(self.entries[Weight(a0 // d, a1 // d)][1], d)
                for d in range(2, g + 1)
                if g % d == 0
            ),
            Fraction(0),
        )
        if denom == 0:
            # norm = 2*height >= 4 here, so the weight cannot be a root
            # (roots have norm 2 or <= 0): its primitive multiplicity is 0
            # and c reduces to the proper-divisor sum.  The recursion gives
            # 0*c = numerator, so the numerator must vanish.
            if num != 0:
                raise ArithmeticError(
                    f"Peterson denominator vanishes with nonzero numerator at {(a0, a1)}"
                )
            c = imprimitive
            m = 0
        else:
            c = num / denom
            m_frac = c - imprimitive
            if m_frac.denominator != 1 or m_frac < 0:
                raise ArithmeticError(
                    f"multiplicity at {(a0, a1)} came out {m_frac}; convention bug"
                )
            m = int(m_frac)
        cvals[(a0, a1)] = c
        self.entries[Weight(a0, a1)] = (c, m)

    def entry(self, weight) -> tuple[Fraction, int]:
        c0, c1 = weight
        self.fill_box(c0, c1)
        return self.entries[Weight(c0, c1)]


def peterson_c(weight, cartan: Rank2Cartan, table: Optional[MultiplicityTable] = None) -> Fraction:
    """The recursion's auxiliary coefficient c_beta = sum_d mult(beta/d)/d."""
    c0, c1 = weight
    if (c0, c1) == (0, 0):
        raise ValueError("c is defined for nonzero weights")
    if table is None:
        table = MultiplicityTable(cartan)
    return table.entry(weight)[0]


def multiplicity(weight, cartan: Rank2Cartan, table: Optional[MultiplicityTable] = None) -> int:
    """dim of the root space at the weight; 0 when the weight is not a root."""
    c0, c1 = weight
    if (c0, c1) == (0, 0):
        raise ValueError("zero weight has no multiplicity")
    if table is None:
        table = MultiplicityTable(cartan)
    return table.entry(weight)[1]


def _mobius_inversion_mult(weight, table: MultiplicityTable) -> int:
    # direct Moebius form, used by tests to cross-check the tabled value
    c0, c1 = weight
    g = gcd(c0, c1)
    acc = Fraction(0)
    for d in range(1, g + 1):
        if g % d == 0:
            acc += Fraction(mobius(d), d) * table.entry(Weight(c0 // d, c1 // d))[0]
    assert acc.denominator == 1 and acc >= 0, (weight, acc)
    return int(acc)


def positive_roots_up_to(
    box, cartan: Rank2Cartan, table: Optional[MultiplicityTable] = None
) -> list[tuple[Weight, int]]:
    """All positive roots inside the lower box, with multiplicities."""
    c0max, c1max = box
    if table is None:
        table = MultiplicityTable(cartan)
    table.fill_box(c0max, c1max)
    out = []
    for c0 in range(c0max + 1):
        for c1 in range(c1max + 1):
            if (c0, c1) == (0, 0):
                continue
            m = table.entries[Weight(c0, c1)][1]
            if m > 0:
                out.append((Weight(c0, c1), m))
    out.sort(key=lambda wm: (wm[0].height, wm[0].c0))
    return out


def kostant_count(weight, cartan: Rank2Cartan, table: Optional[MultiplicityTable] = None) -> int:
    """Number of ways to write the weight as a multiset of positive roots
    (with root-space "colors"): the coefficient of the weight in
    prod over roots of (1 - e^beta)^(-mult).  Dynamic programming over
    the lower box.
    """
    c0, c1 = weight
    if c0 < 0 or c1 < 0:
        raise ValueError("Kostant count needs a nonnegative weight")
    if (c0, c1) == (0, 0):
        return 1
    grid = [[0] * (c1 + 1) for _ in range(c0 + 1)]
    grid[0][0] = 1
    for root, m in positive_roots_up_to(weight, cartan, table):
        b0, b1 = root
        # each factor (1 - e^root)^-1 is one pass of the geometric update
        for _ in range(m):
            for x in range(b0, c0 + 1):
                row = grid[x]
                prev = grid[x - b0]
                for y in range(b1, c1 + 1):
                    row[y] += prev[y - b1]
    return grid[c0][c1]


def export_csv(table: MultiplicityTable, out: TextIO) -> None:
    """Dump the filled box as CSV: c0, c1, norm, class, multiplicity."""
    writer = csv.writer(out)
    writer.writerow(["c0", "c1", "norm", "class", "multiplicity"])
    for weight in sorted(table.entries, key=lambda w: (w.height, w.c0)):
        _, m = table.entries[weight]
        writer.writerow(
            [
                str(weight.c0),
                str(weight.c1),
                str(bilinear_form(weight, weight, table.cartan)),
                classify(weight, table.cartan).value,
                str(m),
            ]
        )
