"""Benchmark the numba kernels against the pure-numpy fallback.

Run:  python3 benchmarks/bench_kernels.py [--sizes 256,1024,2048] [--repeats 3]

Covers the three hot paths: weighted Hankel section assembly, Gram matrix
assembly, and power iteration.  The numba kernels are warmed once before
timing so JIT compilation does not pollute the numbers.
"""

from __future__ import annotations

import argparse
import time

import numpy as np

from dirspace import _accel, _rng


def _time(fn, repeats):
    best = np.inf
    for _ in range(repeats):
        t0 = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - t0)
    return best


def bench(sizes, repeats):
    rows = []
    for n in sizes:
        sym = 1.0 / (np.arange(2 * n - 1, dtype=np.float64) + 1.0)
        sq = np.sqrt(np.arange(1.0, n + 1.0))
        inv = 1.0 / sq
        c = 1.0 / (np.arange(n // 2, dtype=np.float64) + 1.0)
        w = 1.0 / (np.arange(n + c.shape[0], dtype=np.float64) + 1.0)
        v0 = _rng.unit_start_vector(n)
        cases = {
            "hankel_section": lambda: _accel.weighted_hankel(sym, sq, inv),
            "gram": lambda: _accel.gram(c, n // 2, w),
            "power_iteration": lambda m=_accel.weighted_hankel(sym, sq, inv): _accel.power_iteration(
                m, v0, 1e-10, 500
            ),
        }
        for label, fn in cases.items():
            timings = {}
            for backend in _accel.available_backends():
                prev = _accel.use_backend(backend)
                try:
                    fn()  # warm (JIT compile on the numba path)
                    timings[backend] = _time(fn, repeats)
                finally:
                    _accel.use_backend(prev)
            rows.append((label, n, timings))
    return rows


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--sizes", default="256,1024,2048")
    parser.add_argument("--repeats", type=int, default=3)
    args = parser.parse_args()
    sizes = [int(s) for s in args.sizes.split(",")]

    print(f"backends available: {', '.join(_accel.available_backends())}")
    rows = bench(sizes, args.repeats)
    header = f"{'kernel':<18} {'n':>6} " + "".join(f"{b:>12}" for b in _accel.available_backends())
    print(header)
    print("-" * len(header))
    for label, n, timings in rows:
        cells = "".join(f"{timings.get(b, float('nan')) * 1e3:>10.2f}ms" for b in _accel.available_backends())
        print(f"{label:<18} {n:>6} {cells}")


if __name__ == "__main__":
    main()
