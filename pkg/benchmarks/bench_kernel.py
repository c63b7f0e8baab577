#!/usr/bin/env python3
"""Benchmark the compiled transition-map kernel against the pure fallback.

Times the raw maps over an integer box and a full crystal generation with
each backend, then prints a table with the speedup.  Run after an
editable install:

    python3 benchmarks/bench_kernel.py [--box 12] [--hw 6,6] [--repeat 3]
"""

import argparse
import time
from itertools import product

from b2crystal import kernel, pbw


def time_box(fn, n, repeat):
    pts = list(product(range(n + 1), repeat=4))
    best = float("inf")
    for _ in range(repeat):
        t0 = time.perf_counter()
        for p in pts:
            fn(p)
        best = min(best, time.perf_counter() - t0)
    return best, len(pts)


def time_generate(lam, repeat):
    best = float("inf")
    for _ in range(repeat):
        t0 = time.perf_counter()
        g = pbw.generate(lam)
        best = min(best, time.perf_counter() - t0)
    return best, len(g)


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--box", type=int, default=12)
    ap.add_argument("--hw", default="6,6")
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args()
    lam = tuple(int(t) for t in args.hw.split(","))

    backends = kernel.available_backends()
    print(f"available backends: {backends} (default: {kernel.BACKEND})")
    rows = []
    for name in backends:
        prev = kernel.force_backend(name)
        try:
            t_fwd, n_pts = time_box(kernel.r_transfer, args.box, args.repeat)
            t_inv, _ = time_box(kernel.r_inverse, args.box, args.repeat)
            t_gen, n_v = time_generate(lam, args.repeat)
        finally:
            kernel.force_backend(prev)
        rows.append((name, t_fwd, t_inv, t_gen))
        print(
            f"{name:>8}: transfer {t_fwd*1e3:8.2f} ms, inverse {t_inv*1e3:8.2f} ms "
            f"({n_pts} tuples), generate{lam} {t_gen*1e3:8.2f} ms ({n_v} vertices)"
        )
    if len(rows) == 2:
        py = next(r for r in rows if r[0] == "python")
        cy = next(r for r in rows if r[0] != "python")
        print(
            f"speedup ({cy[0]} vs python): transfer x{py[1]/cy[1]:.1f}, "
            f"inverse x{py[2]/cy[2]:.1f}, generate x{py[3]/cy[3]:.1f}"
        )


if __name__ == "__main__":
    main()
