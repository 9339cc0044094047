#!/usr/bin/env python3
"""Benchmark: compiled Bott-sum kernel vs the pure-Python backend.

Workloads mirror the hot paths: full index sequences at the desk-scale
horizon, and a complete verification run.  The naive per-point oracle is
included at a small horizon for scale.
"""

from __future__ import annotations

import time
from fractions import Fraction

from bottiter import IndexProfile, extremal_profile
from bottiter import _purekernel
from bottiter.reference import naive_index

try:
    from bottiter import _fastkernel
except ImportError:
    _fastkernel = None


def _args(p: IndexProfile):
    return (
        list(p.arc_values),
        [t.numerator for t in p.phases],
        [t.denominator for t in p.phases],
    )


def timed(fn, repeat: int = 3) -> float:
    best = float("inf")
    for _ in range(repeat):
        start = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - start)
    return best


def main() -> None:
    q = 20011
    horizon = 10_000
    profiles = {
        f"staircase n={n}": extremal_profile(
            n, [Fraction(3 + 2 * j, q) for j in range(n - 1)]
        )
        for n in (4, 6, 8)
    }

    print(f"index_sequence to m = {horizon} (best of 3):")
    header = f"{'profile':>16} | {'pure':>10} | {'compiled':>10} | speedup"
    print(header)
    print("-" * len(header))
    for name, p in profiles.items():
        arcs, pnum, pden = _args(p)
        t_pure = timed(lambda: _purekernel.index_sequence(arcs, pnum, pden, horizon))
        if _fastkernel is None:
            print(f"{name:>16} | {t_pure * 1e3:9.2f}ms | {'n/a':>10} |")
            continue
        t_fast = timed(lambda: _fastkernel.index_sequence(arcs, pnum, pden, horizon))
        seq_pure = _purekernel.index_sequence(arcs, pnum, pden, horizon)
        seq_fast = _fastkernel.index_sequence(arcs, pnum, pden, horizon)
        assert seq_pure == seq_fast
        print(
            f"{name:>16} | {t_pure * 1e3:9.2f}ms | {t_fast * 1e3:9.2f}ms | "
            f"x{t_pure / t_fast:5.1f}"
        )

    p4 = profiles["staircase n=4"]
    small = 500
    t_naive = timed(lambda: [naive_index(p4, m) for m in range(1, small + 1)], repeat=1)
    arcs, pnum, pden = _args(p4)
    t_counting = timed(lambda: _purekernel.index_sequence(arcs, pnum, pden, small))
    print(
        f"\nnaive per-point oracle to m = {small}: {t_naive * 1e3:.1f}ms "
        f"(lattice counting, pure: {t_counting * 1e3:.2f}ms)"
    )

    from bottiter import KERNEL_BACKEND, verify_theorem

    start = time.perf_counter()
    for n in (3, 4, 5, 6):
        summary = verify_theorem(n, 200, 499)
        assert summary.survivors == []
    print(
        f"\nverify n=3..6 (horizon 200, Q=499), backend={KERNEL_BACKEND}: "
        f"{time.perf_counter() - start:.2f}s"
    )


if __name__ == "__main__":
    main()
