#!/usr/bin/env python3
"""Benchmark the compiled kernels against the numpy fallback.

Times semi-discrete RHS evaluations for both systems on a few grid sizes
and reports the speedup plus the worst relative discrepancy between the
two backends on identical inputs.

    python benchmarks/backend_bench.py [--sizes 100,200,400] [--repeats 5]
"""

import argparse
import time

import numpy as np

import pccu_mhd as pm
from pccu_mhd.pccu import rhs_with_bound


def time_backend(state, model, bc, backend, repeats):
    rhs_with_bound(state, model, bc, backend=backend)  # warm up / JIT imports
    best = float("inf")
    for _ in range(repeats):
        t0 = time.perf_counter()
        rhs, _ = rhs_with_bound(state, model, bc, backend=backend)
        best = min(best, time.perf_counter() - t0)
    return best, rhs


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--sizes", default="100,200,400")
    ap.add_argument("--repeats", type=int, default=5)
    args = ap.parse_args()
    sizes = [int(s) for s in args.sizes.split(",")]

    if "cython" not in pm.available_backends():
        raise SystemExit("compiled kernels unavailable; rebuild with the extension")

    print(f"{'problem':16s} {'grid':>9s} {'numpy':>10s} {'cython':>10s} "
          f"{'speedup':>8s} {'rel diff':>10s}")
    for name in ("orszag-tang", "sw-orszag-tang"):
        for n in sizes:
            preset, grid, model, state = pm.setup_run(name, nx=n, ny=n)
            t_py, rhs_py = time_backend(state.copy(), model, preset.bc, "python", args.repeats)
            t_cy, rhs_cy = time_backend(state.copy(), model, preset.bc, "cython", args.repeats)
            scale = max(1.0, np.abs(rhs_cy).max())
            diff = np.abs(rhs_cy - rhs_py).max() / scale
            print(f"{name:16s} {n:4d}x{n:<4d} {t_py*1e3:8.1f}ms {t_cy*1e3:8.1f}ms "
                  f"{t_py/t_cy:7.1f}x {diff:10.2e}")


if __name__ == "__main__":
    main()
