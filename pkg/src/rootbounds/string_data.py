"""Binary words, run-length (string data) encoding, and the validity criterion.

A word over {0, 1} is recorded by its runs (a1, a2, ...): a1 letters 1,
then a2 letters 0, alternating.  Odd-indexed runs are always the letter 1
(steps in alpha1, drawn as "up"), even-indexed runs the letter 0 (alpha0,
"right"); a1 = 0 encodes words that start with 0.  A run sequence is
canonical when every run after the first is >= 1.
"""

from __future__ import annotations

from itertools import combinations
from typing import Iterable, NamedTuple, Sequence

from .core_lattice import ALPHA0, ALPHA1, Rank2Cartan, Weight, simple_reflection


class StringData(NamedTuple):
    runs: tuple[int, ...]

    @property
    def length(self) -> int:
        return len(self.runs)


class DyckPath(NamedTuple):
    data: StringData
    endpoint: tuple[int, int]  # (n, m) = (right steps, up steps)


def _as_bits(word: Iterable) -> list[int]:
    bits = []
    for ch in word:
        if ch in (0, 1):
            bits.append(ch)
        elif ch in ("0", "1"):
            bits.append(int(ch))
        else:
            raise ValueError(f"word letters must be 0 or 1, got {ch!r}")
    return bits


def word_to_runs(word: Iterable) -> StringData:
    """Canonical run encoding; inverse of runs_to_word."""
    bits = _as_bits(word)
    runs: list[int] = []
    cur_letter = 1
    cur = 0
    for b in bits:
        if b == cur_letter:
            cur += 1
        else:
            runs.append(cur)
            cur_letter = b
            cur = 1
    if bits:
        runs.append(cur)
    return StringData(tuple(runs))


def runs_to_word(data: StringData | Sequence[int]) -> str:
    runs = tuple(data.runs if isinstance(data, StringData) else data)
    if any(a < 1 for a in runs[1:]) or (runs and runs[0] < 0):
        raise ValueError(f"non-canonical run sequence {runs}")
    out = []
    letter = "1"
    for a in runs:
        out.append(letter * a)
        letter = "0" if letter == "1" else "1"
    return "".join(out)


def weight_of(data: StringData | Sequence[int]) -> Weight:
    """c0 = total letter-0 (even-indexed) run length, c1 = total letter-1."""
    runs = tuple(data.runs if isinstance(data, StringData) else data)
    return Weight(sum(runs[1::2]), sum(runs[0::2]))


def is_dyck(data: StringData | Sequence[int]) -> bool:
    """Path stays weakly above the straight diagonal to its endpoint.

    Checked by exact cross-multiplication x*m <= y*n at the end of every
    right run, which is where the path is lowest.
    """
    runs = tuple(data.runs if isinstance(data, StringData) else data)
    if not runs:
        return True
    if len(runs) % 2 != 0 or runs[0] < 1 or any(a < 1 for a in runs):
        return False
    n, m = weight_of(runs)
    x = y = 0
    for i, a in enumerate(runs):
        if i % 2 == 0:
            y += a
        else:
            x += a
            if x * m > y * n:
                return False
    return True


def littelmann_roots(cartan: Rank2Cartan, count: int) -> list[Weight]:
    """The measuring sequence of roots beta_1 = alpha0, beta_2 = s0(alpha1), ...

    Alternating reflections expand to the integer recurrence
    beta_{j+1} = r*beta_j - beta_{j-1}, seeded so that beta_1 = (1, 0).
    For r = 3 the coordinates run through even-index Fibonacci numbers.
    """
    if count < 1:
        raise ValueError("count must be >= 1")
    out = []
    prev, cur = (0, -1), (1, 0)
    for _ in range(count):
        out.append(Weight(*cur))
        prev, cur = cur, (cartan.r * cur[0] - prev[0], cartan.r * cur[1] - prev[1])
    return out


def _roots_by_reflection(cartan: Rank2Cartan, count: int) -> list[Weight]:
    # reference construction: alpha0, s0(alpha1), s0 s1(alpha0), ...
    out = []
    for j in range(1, count + 1):
        v = ALPHA0 if j % 2 == 1 else ALPHA1
        for i in range(j - 2, -1, -1):
            v = Weight(*simple_reflection(i % 2, v, cartan))
        out.append(v)
    return out


def littelmann_valid(data: StringData | Sequence[int], cartan: Rank2Cartan) -> bool:
    """Whether a run sequence is the string data of a crystal element.

    The criterion compares consecutive runs against the measuring roots:
    a_{j+2} * beta_j <= a_{j+1} * beta_{j+1} componentwise, for every j
    with 1 <= j <= L-2.  Length <= 2 is always valid.
    """
    runs = tuple(data.runs if isinstance(data, StringData) else data)
    L = len(runs)
    if L <= 2:
        return True
    betas = littelmann_roots(cartan, L - 1)
    for j in range(1, L - 1):  # 1-based j in [1, L-2]
        a_next = runs[j + 1]  # a_{j+2}
        a_cur = runs[j]  # a_{j+1}
        bj = betas[j - 1]
        bj1 = betas[j]
        if a_next * bj.c0 > a_cur * bj1.c0 or a_next * bj.c1 > a_cur * bj1.c1:
            return False
    return True


def count_valid_string_data(weight, cartan: Rank2Cartan, limit: int = 24) -> int:
    """Exhaustively count words of the given weight with valid string data.

    Equals the weight-space dimension of the positive half of the algebra.
    Guarded: the word space has binomial(c0+c1, c1) elements.
    """
    c0, c1 = weight
    total = c0 + c1
    if total > limit:
        raise ValueError(
            f"weight height {total} exceeds enumeration limit {limit}; "
            "use the Kostant partition count instead"
        )
    count = 0
    for ones in combinations(range(total), c1):
        word = [0] * total
        for i in ones:
            word[i] = 1
        if littelmann_valid(word_to_runs(word), cartan):
            count += 1
    return count
