#!/usr/bin/env python3
"""Check every two-row relation against the brute-force model.

Enumerates all valid relation data up to a degree and value cap, runs
specht_check on each, and reports progress and any counterexamples.
"""

import argparse
import multiprocessing
import sys
import time

from heckehom import GarnirDatum, Multiset, garnir_relation, iter_valid_data, specht_check


def check_one(packed: tuple) -> tuple[tuple, bool]:
    top, pool, bottom, top_len = packed
    datum = GarnirDatum(Multiset(top), Multiset(pool), Multiset(bottom), top_len)
    return packed, specht_check(garnir_relation(datum))


def pack(datum: GarnirDatum) -> tuple:
    return (datum.fixed_top.elements(), datum.pool.elements(),
            datum.fixed_bottom.elements(), datum.top_len)


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--degree", type=int, default=7,
                        help="largest total size to sweep (default 7)")
    parser.add_argument("--values", type=int, default=4,
                        help="largest entry value (default 4)")
    parser.add_argument("--jobs", type=int, default=1)
    args = parser.parse_args()

    work = [pack(d) for d in iter_valid_data(args.degree, args.values)]
    print(f"checking {len(work)} relation data "
          f"(degree <= {args.degree}, values <= {args.values})")
    started = time.monotonic()
    failures = []
    done = 0

    def consume(result):
        nonlocal done
        packed, ok = result
        done += 1
        if not ok:
            failures.append(packed)
            print(f"FAIL: {packed}")
        if done % 500 == 0:
            rate = done / (time.monotonic() - started)
            print(f"  {done}/{len(work)} ({rate:.0f}/s)")

    if args.jobs > 1:
        with multiprocessing.Pool(args.jobs) as pool:
            for result in pool.imap_unordered(check_one, work, chunksize=8):
                consume(result)
    else:
        for packed in work:
            consume(check_one(packed))

    elapsed = time.monotonic() - started
    print(f"done: {len(work) - len(failures)}/{len(work)} passed "
          f"in {elapsed:.1f}s")
    return 1 if failures else 0


if __name__ == "__main__":
    sys.exit(main())
