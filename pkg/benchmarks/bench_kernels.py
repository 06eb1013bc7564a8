#!/usr/bin/env python3
"""Benchmark the pure-Python kernels against the compiled extension.

Times the three enumeration hot paths on identical inputs and prints a
side-by-side table. Run from the repository root:

    python3 benchmarks/bench_kernels.py [--repeat N]
"""

from __future__ import annotations

import argparse
import random
import time

from wildcycles.backend import available_backends


def _time(fn, repeat):
    best = float("inf")
    for _ in range(repeat):
        t0 = time.perf_counter()
        result = fn()
        best = min(best, time.perf_counter() - t0)
    return best, result


def bench_curve(mod, repeat):
    primes = [97, 101, 499, 997]

    def run():
        total = 0
        for p in primes:
            for a in (1, 2, 3):
                total += mod.curve_affine_count(p, a, 1)
                total += sum(mod.curve_slice_counts(p, a, 1))
        return total

    return _time(run, repeat)


def bench_graph(mod, repeat, size=200_000, seed=11):
    rng = random.Random(seed)
    nxt = [rng.randrange(size) for _ in range(size)]

    def run():
        on_cycle, dist = mod.functional_graph_decompose(nxt)
        return sum(on_cycle), sum(dist)

    return _time(run, repeat)


def bench_collatz(mod, repeat, limit=200_000, budget=10_000):
    def run():
        return mod.collatz_sweep_reaches_one(limit, budget)

    return _time(run, repeat)


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--repeat", type=int, default=3, help="timing repeats, best-of (default 3)")
    args = parser.parse_args()

    backends = available_backends()
    if "c" not in backends:
        print("compiled extension not available; benchmarking pure backend only")

    cases = [
        ("curve counts (p up to 997)", bench_curve),
        ("graph decompose (2e5 states)", bench_graph),
        ("collatz sweep (2e5 starts)", bench_collatz),
    ]
    print(f"{'kernel':<32}{'pure (s)':>12}{'c (s)':>12}{'speedup':>10}")
    for label, bench in cases:
        t_pure, r_pure = bench(backends["pure"], args.repeat)
        if "c" in backends:
            t_c, r_c = bench(backends["c"], args.repeat)
            assert r_pure == r_c, f"{label}: backend results disagree"
            print(f"{label:<32}{t_pure:>12.4f}{t_c:>12.4f}{t_pure / t_c:>9.1f}x")
        else:
            print(f"{label:<32}{t_pure:>12.4f}{'-':>12}{'-':>10}")


if __name__ == "__main__":
    main()
