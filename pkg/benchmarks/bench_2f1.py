"""Benchmark the hypergeometric series kernel: numba jit vs numpy fallback.

The workload mirrors what a reference Hulthen sweep does: the six 2F1 factors
at q = 0.9 for every energy on a 100-point grid.  Run with:

    python benchmarks/bench_2f1.py
"""

import math
import time

import numpy as np

from qscat._kernels import _hyp2f1_series_numpy, _hyp2f1_series_scalar

try:
    from numba import njit

    scalar_jit = njit(cache=True)(_hyp2f1_series_scalar)
    HAS_NUMBA = True
except ImportError:
    HAS_NUMBA = False
    print("numba not installed; benchmarking the numpy fallback only")

REL_TOL = 1e-15
MAX_TERMS = 20000
Q = 0.9


def workload():
    """(a, b, c) triples for the six series factors over the energy grid."""
    mass, v0, a = 1.0, 1.0, 0.5
    triples = []
    for energy in np.linspace(1.09, 10.0, 100):
        k = math.sqrt(energy**2 - mass**2)
        p = math.sqrt((energy + v0 / Q) ** 2 - mass**2)
        mu, nu, lam = 1j * k / a, 1j * p / a, 1j * v0 / (a * Q)
        triples += [
            (1 + lam - mu - nu, 1 + lam - mu + nu, 2 - 2 * mu),
            (lam + mu - nu, lam + mu + nu, 1 + 2 * mu),
            (1 + lam + mu - nu, 1 + lam + mu + nu, 2 + 2 * mu),
            (lam - mu - nu, lam - mu + nu, 1 - 2 * mu),
            (1 - lam - mu - nu, 1 - lam - mu + nu, 2 - 2 * mu),
            (-lam - mu - nu, -lam - mu + nu, 1 - 2 * mu),
        ]
    return triples


def run(fn, triples):
    acc = 0.0
    for a, b, c in triples:
        value, _, _, _ = fn(a, b, c, Q, REL_TOL, MAX_TERMS)
        acc += abs(value)
    return acc


def bench(label, fn, triples, repeats=10):
    times = np.empty(repeats)
    checksum = 0.0
    for i in range(repeats):
        t0 = time.process_time()
        checksum = run(fn, triples)
        times[i] = time.process_time() - t0
    print(f"{label:18s} {1e3 * times.mean():9.2f} ms/sweep  +/- {1e3 * times.std():.2f}  "
          f"(checksum {checksum:.6f})")
    return times.mean()


def main():
    triples = workload()
    print(f"workload: {len(triples)} series evaluations at z = {Q}\n")
    t_np = bench("numpy fallback", _hyp2f1_series_numpy, triples)
    t_py = bench("pure python", _hyp2f1_series_scalar, triples, repeats=3)
    if HAS_NUMBA:
        run(scalar_jit, triples[:1])  # trigger compilation outside the timing
        t_nb = bench("numba jit", scalar_jit, triples)
        print(f"\nspeedup vs numpy fallback: {t_np / t_nb:.1f}x")
        print(f"speedup vs pure python:    {t_py / t_nb:.1f}x")


if __name__ == "__main__":
    main()
