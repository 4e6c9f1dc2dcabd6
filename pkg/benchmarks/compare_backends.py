#!/usr/bin/env python3
"""Time the compiled scan kernels against their pure-Python twins.

Runs the three hot loops on representative workloads:

* fgf scan      - the quadratic regularity oracle over Gamma of the
                  all-singleton degree-5 partition (3125 x 3125 records)
* idempotents   - idempotent filter over the same pool
* census        - definition-direct filter of all n^n maps

Usage: python benchmarks/compare_backends.py [--census-n 6] [--repeat 3]
"""

import argparse
import time

from partmaps import _pykernels
from partmaps.core import Partition
from partmaps.enumeration import iter_Gamma_tables
from partmaps.kernels import PackedPool

try:
    from partmaps import _ckernels
except ImportError:
    _ckernels = None


def best_of(repeat, fn, *args):
    best = float("inf")
    for _ in range(repeat):
        start = time.perf_counter()
        result = fn(*args)
        best = min(best, time.perf_counter() - start)
    return best, result


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--census-n", type=int, default=6)
    parser.add_argument("--repeat", type=int, default=3)
    args = parser.parse_args()

    P = Partition.singletons(5)
    pool = PackedPool.from_tables(5, iter_Gamma_tables(P))
    census_blocks = bytes(Partition.singletons(args.census_n).block_of)

    workloads = [
        ("fgf scan (3125^2)", "fgf_flags", (pool.data, pool.data, 5)),
        ("idempotent filter", "idempotent_flags", (pool.data, 5)),
        (f"census n={args.census_n}", "census", (args.census_n, census_blocks)),
    ]

    impls = [("python", _pykernels)]
    if _ckernels is not None:
        impls.append(("c", _ckernels))
    else:
        print("compiled kernels not built; timing the pure backend only\n")

    print(f"{'workload':<22} " + " ".join(f"{name:>12}" for name, _ in impls) + "  speedup")
    for label, fname, fargs in workloads:
        times = []
        results = []
        for _, impl in impls:
            seconds, result = best_of(args.repeat, getattr(impl, fname), *fargs)
            times.append(seconds)
            results.append(result)
        assert all(tuple(r) == tuple(results[0]) for r in results), "backends disagree"
        cells = " ".join(f"{seconds * 1000:>10.1f}ms" for seconds in times)
        speedup = f"{times[0] / times[-1]:>8.1f}x" if len(times) > 1 else "       -"
        print(f"{label:<22} {cells} {speedup}")


if __name__ == "__main__":
    main()
