"""Benchmark the compiled kernels against the pure-Python fallback.

Imports both backend modules directly (bypassing the kmx.kernels
selector) and times the same workloads on each, checking agreement as it
goes. Run from the repository root:

    python3 benchmarks/bench_kernels.py
    python3 benchmarks/bench_kernels.py --scan-rank 7 --height 12
"""

from __future__ import annotations

import argparse
import random
import time

from kmx import _kernels_py
from kmx.diagram import catalog, diagram_by_name

try:
    from kmx import _kernels
except ImportError:
    _kernels = None


def _time(fn, repeat: int) -> float:
    best = float("inf")
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - t0)
    return best


def bench_inertia(mod, gcms, reps: int):
    def run():
        for _ in range(reps):
            for g in gcms:
                mod.inertia(g)
    return run


def bench_roots(mod, gcm, height: int):
    return lambda: mod.roots_up_to_height(gcm, height)


def bench_witness(mod, gcm, pairs):
    def run():
        for a, b in pairs:
            mod.pair_witness(gcm, a, b, 16, 200000, 1)
            mod.pair_witness(gcm, a, b, 16, 200000, -1)
    return run


def bench_scan(mod, rank: int):
    return lambda: mod.scan_hyperbolic_masks(rank)


def main(argv=None) -> int:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=3,
                    help="timing repetitions, best is reported (default 3)")
    ap.add_argument("--scan-rank", type=int, default=6,
                    help="rank for the diagram scan workload (default 6)")
    ap.add_argument("--height", type=int, default=10,
                    help="height bound for the root enumeration workload")
    ap.add_argument("--seed", type=int, default=7)
    args = ap.parse_args(argv)

    if _kernels is None:
        print("compiled backend not built; nothing to compare")
        return 1

    rng = random.Random(args.seed)
    gcms = [d.gcm for d in catalog()]
    e10 = diagram_by_name("E10")
    roots = _kernels_py.roots_up_to_height(e10.gcm, 6)
    pairs = [(rng.choice(roots), rng.choice(roots)) for _ in range(60)]

    workloads = [
        ("inertia (catalog x200)", bench_inertia(_kernels_py, gcms, 200),
         bench_inertia(_kernels, gcms, 200)),
        (f"roots_up_to_height (E10, h={args.height})",
         bench_roots(_kernels_py, e10.gcm, args.height),
         bench_roots(_kernels, e10.gcm, args.height)),
        ("pair_witness (E10, 120 searches)",
         bench_witness(_kernels_py, e10.gcm, pairs),
         bench_witness(_kernels, e10.gcm, pairs)),
        (f"scan_hyperbolic_masks (rank {args.scan_rank})",
         bench_scan(_kernels_py, args.scan_rank),
         bench_scan(_kernels, args.scan_rank)),
    ]

    print(f"{'workload':<40} {'pure (s)':>10} {'compiled (s)':>13} {'speedup':>8}")
    for name, pure_fn, fast_fn in workloads:
        if pure_fn() != fast_fn():
            print(f"{name:<40} BACKEND DISAGREEMENT")
            return 2
        tp = _time(pure_fn, args.repeat)
        tc = _time(fast_fn, args.repeat)
        print(f"{name:<40} {tp:>10.4f} {tc:>13.4f} {tp / tc:>7.1f}x")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
