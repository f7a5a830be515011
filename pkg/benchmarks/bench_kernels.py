#!/usr/bin/env python3
"""Benchmark the modular Bernoulli kernels: numba JIT vs numpy fallback.

Run:  python benchmarks/bench_kernels.py [--max-p 4000]

Both backends compute the full vector of even-index Bernoulli residues
mod p for every odd prime up to the bound (the inner loop of the
irregular-prime scan).  The first numba call includes JIT compilation
and is timed separately.
"""

from __future__ import annotations

import argparse
import time

import numpy as np

from khs._kernels import available_backends, bernoulli_even_mod_vector
from khs.numtheory import primes_below


def time_backend(backend: str, primes: list[int]) -> float:
    start = time.perf_counter()
    for p in primes:
        bernoulli_even_mod_vector(p, backend=backend)
    return time.perf_counter() - start


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--max-p", type=int, default=4000)
    args = parser.parse_args()

    primes = [p for p in primes_below(args.max_p + 1) if p > 3]
    print(f"scan workload: {len(primes)} primes, 5 <= p <= {primes[-1]}")
    print(f"available backends: {', '.join(available_backends())}")

    results: dict[str, float] = {}
    if "numba" in available_backends():
        t0 = time.perf_counter()
        bernoulli_even_mod_vector(101, backend="numba")
        print(f"numba first call (includes JIT): {time.perf_counter() - t0:.3f} s")
        results["numba"] = time_backend("numba", primes)
    results["numpy"] = time_backend("numpy", primes)

    for backend, elapsed in results.items():
        print(f"{backend:>6}: {elapsed:8.3f} s   ({elapsed / len(primes) * 1e3:7.3f} ms/prime)")
    if "numba" in results:
        print(f"speedup numpy/numba: {results['numpy'] / results['numba']:.1f}x")

    # spot-check agreement on the largest prime in the workload
    if "numba" in results:
        a = bernoulli_even_mod_vector(primes[-1], backend="numba")
        b = bernoulli_even_mod_vector(primes[-1], backend="numpy")
        assert np.array_equal(a, b), "backends disagree"
        print("backends agree on the largest workload prime")


if __name__ == "__main__":
    main()
