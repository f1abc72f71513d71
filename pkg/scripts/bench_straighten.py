#!/usr/bin/env python3
"""Time the straightening loop on random tableaux of a given shape.

Useful for checking that memoization keeps large expansions fast, e.g.:

    python3 scripts/bench_straighten.py --shape "10 10" --values 6 --trials 20
"""

import argparse
import random
import statistics
import sys
import time

from heckehom import Multiset, Partition, Tableau, semistandardize


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--shape", default="10 10",
                        help="partition parts, space separated (default '10 10')")
    parser.add_argument("--values", type=int, default=6,
                        help="largest entry value (default 6)")
    parser.add_argument("--trials", type=int, default=10)
    parser.add_argument("--seed", type=int, default=0)
    args = parser.parse_args()

    parts = [int(p) for p in args.shape.split()]
    shape = Partition(sorted(parts, reverse=True))
    rng = random.Random(args.seed)
    times = []
    sizes = []
    for trial in range(args.trials):
        rows = [Multiset([rng.randint(1, args.values) for _ in range(part)])
                for part in shape.stripped]
        tab = Tableau(shape, rows)
        started = time.monotonic()
        result = semistandardize(tab)
        elapsed = time.monotonic() - started
        times.append(elapsed)
        sizes.append(len(result))
        print(f"trial {trial}: {len(result):4d} terms in {elapsed:.3f}s")

    print(f"shape {shape.stripped}, values <= {args.values}, "
          f"{args.trials} trials")
    print(f"median {statistics.median(times):.3f}s, "
          f"max {max(times):.3f}s, "
          f"median terms {statistics.median(sizes):.0f}")
    return 0


if __name__ == "__main__":
    sys.exit(main())
