"""The two exact-integer stability conditions on run sequences.

cond1 constrains every consecutive run ratio; cond2 is a family of
partial-sum slope inequalities indexed by pairs (x, y).  Both come from
stability of the quiver representation a path encodes, distilled to
integer arithmetic so no floating point is involved anywhere.
"""

from __future__ import annotations

import enum
from typing import Sequence

from .core_lattice import Rank2Cartan
from .string_data import StringData, is_dyck


class FilterLevel(enum.Enum):
    DYCK = "dyck"
    COND1 = "cond1"
    COND2 = "cond2"


def _runs(data) -> tuple[int, ...]:
    return tuple(data.runs if isinstance(data, StringData) else data)


def cond1_pair(a: int, b: int, cartan: Rank2Cartan) -> bool:
    """b/a <= (r + sqrt(r^2-4))/2, done exactly.

    The threshold is irrational for every r >= 3 (r^2 - 4 is never a
    perfect square), so b <= a or a^2 + b^2 - r*a*b <= 0 decides the real
    inequality with no boundary ties possible.
    """
    return b <= a or a * a + b * b - cartan.r * a * b <= 0


def cond1(data: StringData | Sequence[int], cartan: Rank2Cartan) -> bool:
    runs = _runs(data)
    return all(cond1_pair(runs[k], runs[k + 1], cartan) for k in range(len(runs) - 1))


def cond2(data: StringData | Sequence[int], cartan: Rank2Cartan) -> bool:
    """Partial-sum slope inequalities for a complete (even-length) sequence.

    With odd/even prefix sums O_i = a1+a3+...+a_{2i-1} and
    E_i = a2+a4+...+a_{2i}, the pair (x, y) with 1 <= x <= y < k requires

        E_y * m <= (O_{x-1} + r*(E_y - E_{x-1}) - (O_{y+1} - O_x)) * n

    where (n, m) is the endpoint.  A nonpositive right factor counts as a
    violation: the left side is at least 1*m, so the cross-multiplied
    comparison handles that case with no special branch.
    """
    runs = _runs(data)
    if len(runs) % 2 != 0:
        raise ValueError("condition defined for complete paths (even run count)")
    k = len(runs) // 2
    odd_ps = [0]
    even_ps = [0]
    for i in range(k):
        odd_ps.append(odd_ps[-1] + runs[2 * i])
        even_ps.append(even_ps[-1] + runs[2 * i + 1])
    m = odd_ps[k]
    n = even_ps[k]
    r = cartan.r
    for y in range(1, k):
        num = even_ps[y]
        for x in range(1, y + 1):
            den = odd_ps[x - 1] + r * (even_ps[y] - even_ps[x - 1]) - (odd_ps[y + 1] - odd_ps[x])
            if num * m > den * n:
                return False
    return True


def passes_filters(data: StringData | Sequence[int], cartan: Rank2Cartan, level: FilterLevel) -> bool:
    """Cumulative filter: COND1 implies the Dyck test, COND2 implies both."""
    runs = _runs(data)
    if not is_dyck(runs):
        return False
    if level is FilterLevel.DYCK:
        return True
    if not cond1(runs, cartan):
        return False
    if level is FilterLevel.COND1:
        return True
    return cond2(runs, cartan)
