#!/usr/bin/env python3
"""Benchmark the two independent evaluators of floor(phi * x) against each
other: the integer-sqrt closed form and the Zeckendorf index shift."""

import argparse
import time

from beatty.golden import f_floor, f_zeck


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--limit", type=int, default=1_000_000)
    args = parser.parse_args()

    started = time.perf_counter()
    for x in range(1, args.limit + 1):
        f_floor(x)
    floor_time = time.perf_counter() - started

    started = time.perf_counter()
    for x in range(1, args.limit + 1):
        f_zeck(x)
    zeck_time = time.perf_counter() - started

    started = time.perf_counter()
    mismatches = sum(1 for x in range(1, args.limit + 1) if f_floor(x) != f_zeck(x))
    both_time = time.perf_counter() - started

    print(f"range                 [1, {args.limit}]")
    print(f"isqrt closed form     {floor_time:8.2f}s  ({args.limit / floor_time:,.0f}/s)")
    print(f"zeckendorf shift      {zeck_time:8.2f}s  ({args.limit / zeck_time:,.0f}/s)")
    print(f"cross-check           {both_time:8.2f}s  mismatches: {mismatches}")


if __name__ == "__main__":
    main()
