#!/usr/bin/env python3
"""Benchmark the truncated-series kernels: numba JIT path vs pure numpy.

Times the raw series product at several precisions and extension degrees,
then a realistic valuation workload (deep lacunary gap, forcing precision
escalation to 1024).  The numba path is compiled before timing; if numba is
unavailable or CHARP_PURE_NUMPY=1 is set, only the numpy path is reported.
"""

import argparse
import time

import numpy as np

from charp import _kernels
from charp.ffield import make_context
from charp.parser import parse_poly
from charp.streams import lacunary
from charp.valuation import EmbeddingValuation


def _random_series(rng, n, m, p, density=1.0):
    arr = rng.integers(0, p, size=(n, m), dtype=np.int64)
    if density < 1.0:
        mask = rng.random(size=n) < density
        arr *= mask[:, None]
    return arr


def time_call(fn, *args, repeats=5):
    best = float("inf")
    for _ in range(repeats):
        t0 = time.perf_counter()
        fn(*args)
        best = min(best, time.perf_counter() - t0)
    return best


def bench_mul(repeats):
    # dense rows show numpy's optimized convolve at its best; the sparse
    # rows are the shape valuation workloads actually have (gap series
    # keep a handful of nonzero coefficients), where the JIT loop's
    # zero-skipping wins
    rng = np.random.default_rng(42)
    print(f"{'case':<32}{'numpy':>12}{'numba':>12}{'speedup':>10}")
    cases = []
    for p, m in [(2, 1), (5, 1), (2, 2)]:
        for n in (256, 1024, 4096):
            cases.append((p, m, n, 1.0))
    for n in (1024, 4096):
        cases.append((2, 1, n, 0.01))
    for p, m, n, density in cases:
        ctx = make_context(p, m)
        red = ctx.reduction_array
        a = _random_series(rng, n, m, p, density)
        b = _random_series(rng, n, m, p, density)
        t_np = time_call(_kernels.series_mul_numpy, a, b, red, p, n,
                         repeats=repeats)
        kind = "dense" if density == 1.0 else "sparse"
        label = f"mul p={p} m={m} N={n} {kind}"
        if _kernels.backend() == "numba":
            jit = _kernels._MUL_JIT
            jit(a, b, red, p, n)  # compile outside the timer
            t_nb = time_call(jit, a, b, red, p, n, repeats=repeats)
            print(f"{label:<32}{t_np * 1e3:>10.2f}ms"
                  f"{t_nb * 1e3:>10.2f}ms{t_np / t_nb:>9.1f}x")
        else:
            print(f"{label:<32}{t_np * 1e3:>10.2f}ms{'n/a':>12}{'':>10}")


def bench_valuation(repeats):
    ctx = make_context(2)
    f = parse_poly("y - x - x^2 - x^6 - x^24 - x^120", ctx, 2)

    def run():
        V = EmbeddingValuation(ctx, [lacunary(ctx)])
        value, cert = V.valuate_with_certificate(f)
        assert value == 720 and cert == 1024

    run()  # warm compile and caches
    best = time_call(run, repeats=repeats)
    print(f"\nvaluation workload (order 720, escalates to N=1024, "
          f"backend={_kernels.backend()}): {best * 1e3:.1f}ms")


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--repeats", type=int, default=5)
    args = ap.parse_args()
    print(f"active backend: {_kernels.backend()}")
    bench_mul(args.repeats)
    bench_valuation(args.repeats)


if __name__ == "__main__":
    main()
