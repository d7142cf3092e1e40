"""Uniform random rational Dyck paths and Monte-Carlo bound estimation.

Sampling is exact-uniform: draw a uniformly shuffled word, then rotate it
to the unique cyclic representative that stays above the diagonal (the
minimum of the weighted height profile is unique because the endpoint
coordinates are coprime).  Estimation runs in fixed-size chunks, each with
its own child RNG stream derived from (seed, chunk index), so results are
bit-identical for a given (seed, samples, chunk) at any thread count.
"""

from __future__ import annotations

import json
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from decimal import Decimal, localcontext
from fractions import Fraction
from math import gcd
from typing import Optional

import numpy as np

from .core_lattice import Rank2Cartan, dyck_count
from .stability_filters import FilterLevel, cond2
from .string_data import DyckPath, StringData, is_dyck

DEFAULT_CHUNK = 1 << 16


@dataclass(frozen=True)
class EstimateReport:
    weight: tuple[int, int]
    r: int
    filter: FilterLevel
    samples: int
    hits: int
    dyck_total: int
    estimate: str
    std_error: str
    seed: int
    chunk: int

    def to_json(self) -> str:
        # every integer goes out as a decimal string except the small
        # root coordinates and r, so parsers never face >2^53 numbers
        payload = {
            "root": [self.weight[0], self.weight[1]],
            "r": self.r,
            "filter": self.filter.value,
            "samples": str(self.samples),
            "hits": str(self.hits),
            "dyck_total": str(self.dyck_total),
            "estimate": self.estimate,
            "std_error": self.std_error,
            "seed": str(self.seed),
            "chunk": str(self.chunk),
        }
        return json.dumps(payload, sort_keys=True, separators=(",", ":"))


@dataclass(frozen=True)
class VisitsReport:
    k: int
    distance: int
    samples: int
    seed: int
    mean: str
    std_error: str

    def to_json(self) -> str:
        payload = {
            "k": self.k,
            "distance": self.distance,
            "samples": str(self.samples),
            "seed": str(self.seed),
            "mean": self.mean,
            "std_error": self.std_error,
        }
        return json.dumps(payload, sort_keys=True, separators=(",", ":"))


def _sig6(x: Fraction) -> str:
    with localcontext() as ctx:
        ctx.prec = 6
        return str(Decimal(x.numerator) / Decimal(x.denominator))


def _sqrt_sig6(x: Fraction) -> str:
    with localcontext() as ctx:
        ctx.prec = 28
        root = (Decimal(x.numerator) / Decimal(x.denominator)).sqrt()
        ctx.prec = 6
        return str(+root)


def _chunk_rng(seed: int, index: int) -> np.random.Generator:
    return np.random.Generator(np.random.PCG64(np.random.SeedSequence((seed, index))))


def sample_uniform_dyck(weight, rng: np.random.Generator) -> DyckPath:
    """One exactly-uniform Dyck path to (n, m) = weight, gcd(m, n) = 1."""
    n, m = weight
    if gcd(m, n) != 1:
        raise ValueError("uniform sampling requires a coprime endpoint")
    N = n + m
    base = np.zeros(N, dtype=np.int8)
    base[:m] = 1
    word = rng.permutation(base)
    heights = np.empty(N, dtype=np.int64)
    heights[0] = 0
    np.cumsum(np.where(word == 1, n, -m)[: N - 1], out=heights[1:])
    p = int(np.argmin(heights))
    if __debug__:
        assert int((heights == heights[p]).sum()) == 1, "minimum must be unique"
    rotated = np.roll(word, -p)
    boundaries = np.flatnonzero(rotated[1:] != rotated[:-1])
    runs = np.diff(np.concatenate(([-1], boundaries, [N - 1])))
    path = DyckPath(StringData(tuple(int(a) for a in runs)), (n, m))
    if __debug__:
        assert is_dyck(path.data)
    return path


def _rotate_batch(W: np.ndarray, n: int, m: int) -> np.ndarray:
    B, N = W.shape
    # prefix heights are bounded by n*m in absolute value
    dt = np.int32 if n * m < 2**31 else np.int64
    inc = np.where(W == 1, n, -m).astype(dt)
    heights = np.empty((B, N), dtype=dt)
    heights[:, 0] = 0
    np.cumsum(inc[:, : N - 1], axis=1, out=heights[:, 1:])
    p = np.argmin(heights, axis=1)
    idx = ((p[:, None] + np.arange(N, dtype=np.int64)[None, :]) % N).astype(np.int32)
    return np.take_along_axis(W, idx, axis=1)


def _cond1_pass_rows(R: np.ndarray, r: int) -> np.ndarray:
    """Vectorized consecutive-run-ratio test over every row at once."""
    B, N = R.shape
    change = R[:, 1:] != R[:, :-1]
    rows, cols = np.nonzero(change)
    passed = np.ones(B, dtype=bool)
    if len(cols) == 0:
        return passed  # single-run rows (cannot happen for rotated paths with n,m >= 1)
    prev = np.empty_like(cols)
    prev[0] = -1
    same_row = rows[1:] == rows[:-1]
    prev[1:] = np.where(same_row, cols[:-1], -1)
    runlen = cols - prev  # all runs except each row's last
    a = runlen[:-1]
    b = runlen[1:]
    bad = same_row & (b > a) & (a * a + b * b - r * a * b > 0)
    passed[rows[:-1][bad]] = False
    is_last = np.empty(len(cols), dtype=bool)
    is_last[:-1] = ~same_row
    is_last[-1] = True
    a = runlen[is_last]
    b = (N - 1) - cols[is_last]
    bad = (b > a) & (a * a + b * b - r * a * b > 0)
    passed[rows[is_last][bad]] = False
    return passed


def _row_runs(row: np.ndarray) -> tuple[int, ...]:
    boundaries = np.flatnonzero(row[1:] != row[:-1])
    return tuple(int(x) for x in np.diff(np.concatenate(([-1], boundaries, [len(row) - 1]))))


def _estimate_chunk(args) -> int:
    n, m, r, level, seed, index, size = args
    rng = _chunk_rng(seed, index)
    base = np.zeros(n + m, dtype=np.int8)
    base[:m] = 1
    W = rng.permuted(np.tile(base, (size, 1)), axis=1)
    R = _rotate_batch(W, n, m)
    ok = _cond1_pass_rows(R, r)
    if level is FilterLevel.COND1:
        return int(ok.sum())
    cartan = Rank2Cartan(r)
    hits = 0
    for i in np.flatnonzero(ok):
        if cond2(_row_runs(R[i]), cartan):
            hits += 1
    return hits


def estimate_bound(
    weight,
    cartan: Rank2Cartan,
    level: FilterLevel,
    samples: int,
    seed: int,
    threads: int = 1,
    chunk: int = DEFAULT_CHUNK,
) -> EstimateReport:
    """Monte-Carlo estimate of a filtered path count.

    estimate = (hits / samples) * dyck_total, with the binomial standard
    error sqrt(p(1-p)/samples) * dyck_total; both reported to 6
    significant digits as decimal strings.
    """
    n, m = weight
    if level not in (FilterLevel.COND1, FilterLevel.COND2):
        raise ValueError("estimation targets the cond1 or cond2 filter")
    if samples < 1:
        raise ValueError("need at least one sample")
    if chunk < 1:
        raise ValueError("chunk size must be positive")
    total = dyck_count(n, m)  # also validates coprimality
    sizes = [chunk] * (samples // chunk)
    if samples % chunk:
        sizes.append(samples % chunk)
    jobs = [(n, m, cartan.r, level, seed, i, s) for i, s in enumerate(sizes)]
    if threads > 1:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            hits = sum(pool.map(_estimate_chunk, jobs))
    else:
        hits = sum(map(_estimate_chunk, jobs))
    p = Fraction(hits, samples)
    return EstimateReport(
        weight=(n, m),
        r=cartan.r,
        filter=level,
        samples=samples,
        hits=hits,
        dyck_total=total,
        estimate=_sig6(p * total),
        std_error=_sqrt_sig6(p * (1 - p) / samples * total * total),
        seed=seed,
        chunk=chunk,
    )


def visits_statistic(
    k: int,
    distance: int,
    samples: int,
    seed: int,
    chunk: int = DEFAULT_CHUNK,
) -> VisitsReport:
    """Mean number of path points on the shifted diagonal y - x = distance,
    over uniform Dyck paths to (k+1, k).  Approaches 4*distance + 4 for
    large k.
    """
    if k < 1 or distance < 0 or samples < 1:
        raise ValueError("need k >= 1, distance >= 0, samples >= 1")
    n, m = k + 1, k
    base = np.zeros(n + m, dtype=np.int8)
    base[:m] = 1
    total = 0
    total_sq = 0
    done = 0
    index = 0
    while done < samples:
        size = min(chunk, samples - done)
        rng = _chunk_rng(seed, index)
        W = rng.permuted(np.tile(base, (size, 1)), axis=1)
        R = _rotate_batch(W, n, m)
        diag = np.cumsum(np.where(R == 1, 1, -1).astype(np.int32), axis=1)
        counts = (diag == distance).sum(axis=1)
        if distance == 0:
            counts = counts + 1  # the origin sits on the main diagonal
        total += int(counts.sum())
        total_sq += int((counts.astype(np.int64) ** 2).sum())
        done += size
        index += 1
    mean = Fraction(total, samples)
    variance = Fraction(total_sq, samples) - mean * mean
    return VisitsReport(
        k=k,
        distance=distance,
        samples=samples,
        seed=seed,
        mean=_sig6(mean),
        std_error=_sqrt_sig6(variance / samples),
    )
