"""Benchmark the numba-compiled kernels against the pure-numpy fallback.

Usage:
    python benchmarks/bench_kernels.py [--tuples 200000] [--draws 2000000]

Each kernel is warmed up once (triggering JIT compilation on the numba side),
then timed over several repetitions; the best time is reported. Outputs of
the two paths are cross-checked before timing.
"""

from __future__ import annotations

import argparse
import math
import time

import numpy as np

from bellxtalk import _kernels
from bellxtalk.bipartite import bell_state_batch


def best_time(fn, args, repeat=5):
    fn(*args)  # warm-up / JIT
    best = math.inf
    for _ in range(repeat):
        start = time.perf_counter()
        fn(*args)
        best = min(best, time.perf_counter() - start)
    return best


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--tuples", type=int, default=200_000, help="angle tuples per probability kernel")
    parser.add_argument("--draws", type=int, default=2_000_000, help="draws for the sampling kernel")
    parser.add_argument("--repeat", type=int, default=5)
    args = parser.parse_args()

    rng = np.random.default_rng(0)
    n = args.tuples
    mu = rng.uniform(0, np.pi, n)
    eta = rng.uniform(0, 2 * np.pi, n)
    nu = rng.uniform(0, np.pi, n)
    zeta = rng.uniform(0, 2 * np.pi, n)
    s = rng.integers(0, 2, n)
    t = rng.integers(0, 2, n)
    psi = bell_state_batch(s, t)
    cdf = np.array([0.1, 0.45, 0.8, 1.0])

    cases = [
        ("closed_joint", (mu, eta, nu, zeta, s, t)),
        ("closed_joint_alt", (mu, eta, nu, zeta, s, t)),
        ("amplitude_joint", (mu, eta, nu, zeta, s, t)),
        ("bruteforce_joint", (mu, eta, nu, zeta, psi)),
        ("sample_counts", (cdf, args.draws, np.uint64(42))),
    ]

    has_numba = _kernels.closed_joint_numba is not None
    print(f"active backend: {_kernels.BACKEND}")
    print(f"probability kernels: {n} tuples; sampler: {args.draws} draws")
    if not has_numba:
        print("numba backend unavailable (disabled or not installed); timing numpy only")
    header = f"{'kernel':<20} {'numpy':>12} {'numba':>12} {'speedup':>9}"
    print(header)
    print("-" * len(header))

    for name, call_args in cases:
        numpy_fn = getattr(_kernels, name + "_numpy")
        t_numpy = best_time(numpy_fn, call_args, args.repeat)
        if has_numba:
            numba_fn = getattr(_kernels, name + "_numba")
            out_jit = numba_fn(*call_args)
            out_np = numpy_fn(*call_args)
            if name == "sample_counts":
                assert np.array_equal(out_jit, out_np), name
            else:
                assert np.abs(out_jit - out_np).max() <= 1e-13, name
            t_numba = best_time(numba_fn, call_args, args.repeat)
            print(f"{name:<20} {t_numpy * 1e3:>9.2f} ms {t_numba * 1e3:>9.2f} ms {t_numpy / t_numba:>8.1f}x")
        else:
            print(f"{name:<20} {t_numpy * 1e3:>9.2f} ms {'-':>12} {'-':>9}")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
