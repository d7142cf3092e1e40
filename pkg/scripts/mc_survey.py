#!/usr/bin/env python3
"""Monte-Carlo survey of the two bounds at roots too large for exact counts.

Emits one JSON line per (root, filter) pair.  With the defaults this
estimates both filters at (51,50) and (50,51); pass --roots to survey
other coprime weights.

Example:
    python scripts/mc_survey.py --samples 10000000 --seed 42
"""

import argparse
import sys
import time

from rootbounds import FilterLevel, Rank2Cartan, estimate_bound


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--r", type=int, default=3)
    ap.add_argument("--roots", default="51,50;50,51", help="semicolon-separated c0,c1 pairs")
    ap.add_argument("--samples", type=int, default=10**7)
    ap.add_argument("--seed", type=lambda s: int(s, 0), default=42)
    ap.add_argument("--threads", type=int, default=1)
    args = ap.parse_args()

    cartan = Rank2Cartan(args.r)
    for part in args.roots.split(";"):
        c0, c1 = (int(x) for x in part.split(","))
        for level in (FilterLevel.COND1, FilterLevel.COND2):
            t0 = time.perf_counter()
            rep = estimate_bound(
                (c0, c1), cartan, level, samples=args.samples, seed=args.seed, threads=args.threads
            )
            print(
                f"({c0},{c1}) {level.value}: {rep.hits}/{rep.samples} in "
                f"{time.perf_counter() - t0:.1f}s",
                file=sys.stderr,
            )
            print(rep.to_json())
    return 0


if __name__ == "__main__":
    sys.exit(main())
