"""Command-line surface: exact multiplicities, exact and estimated bounds,
word diagnostics, and CSV accuracy tables.

All results go to stdout as JSON (or CSV for tables); diagnostics and
errors go to stderr.  Integers that could overflow a double-precision
JSON reader are emitted as decimal strings.
"""

from __future__ import annotations

import argparse
import csv
import json
import os
import sys
from typing import Optional, Sequence

from .core_lattice import Rank2Cartan, Weight, classify, dyck_count
from .counting import bound_report, enumerate_dyck
from .peterson import MultiplicityTable
from .sampler import DEFAULT_CHUNK, estimate_bound, visits_statistic
from .stability_filters import FilterLevel, cond1, cond2
from .string_data import (
    is_dyck,
    littelmann_valid,
    runs_to_word,
    weight_of,
    word_to_runs,
)

THREADS_ENV = "ROOTBOUNDS_THREADS"


def _parse_root(text: str) -> Weight:
    parts = text.split(",")
    if len(parts) != 2:
        raise ValueError(f"--root wants 'c0,c1', got {text!r}")
    c0, c1 = (int(p) for p in parts)
    if c0 < 0 or c1 < 0:
        raise ValueError("root coefficients must be nonnegative")
    return Weight(c0, c1)


def _parse_seed(text: str) -> int:
    # accepts decimal or hex (0x...) spellings
    return int(text, 0)


def _theorem_level(theorem: int) -> FilterLevel:
    return FilterLevel.COND1 if theorem == 1 else FilterLevel.COND2


def _emit(payload: dict, fmt: str) -> None:
    if fmt == "csv":
        scalar = {k: v for k, v in payload.items() if not isinstance(v, (list, dict))}
        writer = csv.writer(sys.stdout)
        writer.writerow(scalar.keys())
        writer.writerow(scalar.values())
    else:
        print(json.dumps(payload, sort_keys=True, separators=(",", ":")))


def cmd_mult(args) -> int:
    root = _parse_root(args.root)
    if root == (0, 0):
        raise ValueError("zero weight has no multiplicity")
    cartan = Rank2Cartan(args.r)
    table = MultiplicityTable(cartan)
    _emit(
        {
            "root": [root.c0, root.c1],
            "r": args.r,
            "class": classify(root, cartan).value,
            "multiplicity": str(table.entry(root)[1]),
        },
        args.format,
    )
    return 0


def cmd_bound(args) -> int:
    root = _parse_root(args.root)
    cartan = Rank2Cartan(args.r)
    report = bound_report(root, cartan)
    payload = {
        "root": [root.c0, root.c1],
        "r": args.r,
        "theorem": args.theorem,
        "dyck_total": str(report.dyck_total),
        "count_thm1": str(report.count_thm1),
        "count_thm2": str(report.count_thm2),
        "bound": str(report.count_thm1 if args.theorem == 1 else report.count_thm2),
        "elapsed_seconds": round(report.elapsed, 3),
    }
    if args.list:
        words: list[str] = []
        enumerate_dyck(
            root,
            cartan,
            _theorem_level(args.theorem),
            visit=lambda runs: words.append(runs_to_word(runs)),
        )
        payload["paths"] = sorted(words)
    _emit(payload, args.format)
    return 0


def cmd_estimate(args) -> int:
    root = _parse_root(args.root)
    cartan = Rank2Cartan(args.r)
    report = estimate_bound(
        root,
        cartan,
        _theorem_level(args.theorem),
        samples=args.samples,
        seed=args.seed,
        threads=args.threads,
        chunk=args.chunk,
    )
    print(report.to_json())
    return 0


def cmd_validate(args) -> int:
    data = word_to_runs(args.word)
    runs = data.runs
    w = weight_of(data)
    cartan = Rank2Cartan(args.r)
    payload = {
        "word": args.word,
        "runs": [int(a) for a in runs],
        "weight": [w.c0, w.c1],
        "littelmann_valid": littelmann_valid(data, cartan),
        "is_dyck": is_dyck(data),
        # the run-pair conditions assume every run >= 1, so words that
        # start with 0 get null here rather than a made-up verdict
        "cond1": cond1(runs, cartan) if all(a >= 1 for a in runs) else None,
        "cond2": (
            cond2(runs, cartan)
            if len(runs) % 2 == 0 and all(a >= 1 for a in runs)
            else None
        ),
    }
    _emit(payload, args.format)
    return 0


def cmd_table(args) -> int:
    cartan = Rank2Cartan(args.r)
    table = MultiplicityTable(cartan)
    if args.family == "custom":
        if not args.roots:
            raise ValueError("--family custom needs --roots 'c0,c1;c0,c1;...'")
        roots = [_parse_root(part) for part in args.roots.split(";")]
        rows = list(enumerate(roots, start=1))
    else:
        if args.max_n < 1:
            raise ValueError("--max-n must be >= 1")
        rows = []
        for n in range(1, args.max_n + 1):
            root = Weight(n + 1, n) if args.family == "staircase" else Weight(n, n + 1)
            rows.append((n, root))
    writer = csv.writer(sys.stdout)
    writer.writerow(["n", "root_c0", "root_c1", "multiplicity", "bound1", "bound2", "gap1", "gap2"])
    for n, root in rows:
        mult = table.entry(root)[1]
        guard = args.skip_bounds_above
        if guard is not None and dyck_count(root.c0, root.c1) > guard:
            b1 = b2 = g1 = g2 = "skipped"
        else:
            report = bound_report(root, cartan)
            b1, b2 = report.count_thm1, report.count_thm2
            g1, g2 = b1 - mult, b2 - mult
        writer.writerow([n, root.c0, root.c1, mult, b1, b2, g1, g2])
    return 0


def cmd_stats(args) -> int:
    report = visits_statistic(
        args.k, args.distance, samples=args.samples, seed=args.seed, chunk=args.chunk
    )
    print(report.to_json())
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="rootbounds",
        description=(
            "Exact rank-2 hyperbolic root multiplicities and Dyck-path upper "
            "bounds.  Roots are given as --root c0,c1 = coefficients of "
            "(alpha0, alpha1); c0 counts right steps / letter 0, c1 counts "
            "up steps / letter 1."
        ),
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common(p, root=True):
        p.add_argument("--r", type=int, default=3, help="Cartan off-diagonal magnitude, >= 3")
        if root:
            p.add_argument("--root", required=True, help="weight as c0,c1")
        p.add_argument("--format", choices=("json", "csv"), default="json")

    p = sub.add_parser("mult", help="exact root multiplicity")
    add_common(p)
    p.set_defaults(fn=cmd_mult)

    p = sub.add_parser("bound", help="exact filtered Dyck path counts")
    add_common(p)
    p.add_argument(
        "--theorem",
        type=int,
        choices=(1, 2),
        required=True,
        help="1 = run-ratio filter, 2 = ratio + partial-sum filter (tighter)",
    )
    p.add_argument("--list", action="store_true", help="also list passing paths as words")
    p.set_defaults(fn=cmd_bound)

    p = sub.add_parser("estimate", help="Monte-Carlo estimate of a bound")
    add_common(p)
    p.add_argument("--theorem", type=int, choices=(1, 2), required=True)
    p.add_argument("--samples", type=int, required=True)
    p.add_argument("--seed", type=_parse_seed, required=True, help="decimal or hex")
    p.add_argument(
        "--threads",
        type=int,
        default=int(os.environ.get(THREADS_ENV, "1")),
        help=f"worker threads (default ${THREADS_ENV} or 1); does not affect results",
    )
    p.add_argument("--chunk", type=int, default=DEFAULT_CHUNK, help="samples per RNG chunk")
    p.set_defaults(fn=cmd_estimate)

    p = sub.add_parser("validate", help="diagnose one binary word")
    p.add_argument("--r", type=int, default=3)
    p.add_argument("--word", required=True, help="ASCII string of 0s and 1s")
    p.add_argument("--format", choices=("json", "csv"), default="json")
    p.set_defaults(fn=cmd_validate)

    p = sub.add_parser("table", help="CSV accuracy table over a root family")
    p.add_argument("--r", type=int, default=3)
    p.add_argument("--family", choices=("staircase", "antistaircase", "custom"), required=True)
    p.add_argument("--max-n", type=int, default=6)
    p.add_argument("--roots", help="for --family custom: 'c0,c1;c0,c1;...'")
    p.add_argument(
        "--skip-bounds-above",
        type=int,
        default=None,
        help="mark bound cells 'skipped' when the Dyck total exceeds this",
    )
    p.set_defaults(fn=cmd_table)

    p = sub.add_parser("stats", help="diagonal-visit statistic of sampled paths")
    p.add_argument("--k", type=int, required=True, help="paths run to (k+1, k)")
    p.add_argument("--distance", type=int, required=True, help="count points with y - x = distance")
    p.add_argument("--samples", type=int, required=True)
    p.add_argument("--seed", type=_parse_seed, default=0)
    p.add_argument("--chunk", type=int, default=DEFAULT_CHUNK)
    p.set_defaults(fn=cmd_stats)

    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.fn(args)
    except (ValueError, ArithmeticError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
