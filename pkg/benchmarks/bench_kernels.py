#!/usr/bin/env python3
"""Benchmark the compiled polynomial kernels against the pure-Python fallback.

Runs the same workloads through cyclopadic._kernels (Cython, if built) and
cyclopadic._kernels_py and prints a timing table. Usage:

    python3 benchmarks/bench_kernels.py [--repeat N]
"""
import argparse
import time

from cyclopadic import _kernels_py
from cyclopadic.cycle_index import cycle_indicator
from cyclopadic.polyring import MultiPoly

try:
    from cyclopadic import _kernels as _kernels_c
except ImportError:
    _kernels_c = None


def _pow_with(kern, terms, n):
    result = {(): 1}
    base = terms
    while n:
        if n & 1:
            result = kern.mul_terms(result, base)
        n >>= 1
        if n:
            base = kern.mul_terms(base, base)
    return result


def _build_indicator_with(kern, n):
    from math import factorial

    polys = [{(): 1}]
    for m in range(1, n + 1):
        fact = factorial(m - 1)
        acc = {}
        for j in range(m):
            kern.shift_accumulate(acc, polys[j], m - j - 1, fact // factorial(j))
        polys.append(acc)
    return polys[n]


def bench(label, fn, repeat):
    best = None
    result = None
    for _ in range(repeat):
        t0 = time.perf_counter()
        result = fn()
        dt = time.perf_counter() - t0
        best = dt if best is None else min(best, dt)
    return label, best, result


def main():
    parser = argparse.ArgumentParser()
    parser.add_argument("--repeat", type=int, default=3)
    args = parser.parse_args()

    c20 = cycle_indicator(20).terms
    c24 = cycle_indicator(24).terms
    binom = ((MultiPoly.variable(1) ** 3) - MultiPoly.variable(3)).terms

    workloads = [
        ("mul C_20 * C_20 (627x627 terms)", lambda k: k.mul_terms(c20, c20)),
        ("mul (X1^3-X3)^12 * C_24", lambda k: k.mul_terms(
            _pow_with(k, binom, 12), c24)),
        ("pow (X1^3-X3)^24", lambda k: _pow_with(k, binom, 24)),
        ("build C_30 via recurrence", lambda k: _build_indicator_with(k, 30)),
    ]

    backends = [("python", _kernels_py)]
    if _kernels_c is not None:
        backends.insert(0, ("cython", _kernels_c))
    else:
        print("compiled kernel not available; benchmarking fallback only")

    print(f"{'workload':<36} " + " ".join(f"{n:>10}" for n, _ in backends)
          + ("    speedup" if len(backends) == 2 else ""))
    for label, fn in workloads:
        times = []
        results = []
        for _, kern in backends:
            _, dt, res = bench(label, lambda kern=kern: fn(kern), args.repeat)
            times.append(dt)
            results.append(res)
        assert all(r == results[0] for r in results), "backend results differ"
        row = f"{label:<36} " + " ".join(f"{t*1000:>8.1f}ms" for t in times)
        if len(times) == 2:
            row += f"    {times[1] / times[0]:>5.2f}x"
        print(row)


if __name__ == "__main__":
    main()
