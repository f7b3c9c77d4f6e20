#!/usr/bin/env python3
"""Compare the compiled segment-marking kernel against the numpy fallback.

Usage: python benchmarks/bench_sieve.py [max_exponent]

Builds full tables at 10^6..10^max_exponent with each backend and reports
wall time plus the verified prime count. The compiled kernel's edge is the
odd-stride inner loop; numpy pays per-prime slice overhead instead.
"""

import sys
import time

import primelab
from primelab.sieve import build_prime_table


def bench(limit: int, backend: str, repeats: int = 3) -> tuple[float, int]:
    best = float("inf")
    count = 0
    for _ in range(repeats):
        t0 = time.perf_counter()
        table = build_prime_table(limit, backend=backend)
        best = min(best, time.perf_counter() - t0)
        count = table.prime_count
    return best, count


def main() -> int:
    max_exp = int(sys.argv[1]) if len(sys.argv) > 1 else 8
    backends = ["numpy"]
    if primelab.HAVE_COMPILED_CORE:
        backends.append("compiled")
    else:
        print("compiled core not built; benchmarking the fallback only")
    print(f"{'limit':>12} " + " ".join(f"{b:>12}" for b in backends) + f" {'pi(limit)':>12}")
    for exp in range(6, max_exp + 1):
        limit = 10**exp
        times = {}
        counts = set()
        for b in backends:
            repeats = 3 if exp < 8 else 1
            t, c = bench(limit, b, repeats)
            times[b] = t
            counts.add(c)
        assert len(counts) == 1, "backends disagree on the prime count"
        row = f"{limit:>12,} " + " ".join(f"{times[b]:>11.3f}s" for b in backends)
        print(row + f" {counts.pop():>12,}")
        if len(backends) == 2:
            print(f"{'':>12} speedup {times['numpy'] / times['compiled']:.2f}x")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
