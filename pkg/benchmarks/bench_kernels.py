#!/usr/bin/env python3
"""Benchmark the exhaustive-scan kernels: numba odometer vs chunked numpy.

Runs the minimum-distance enumeration for a chosen construction on both
backends, checks that they agree, and prints timings.  The default instance
is the [12, 6, 5] code over GF(13), whose 13^6 - 1 = 4 826 808 codewords are
the heaviest scan in the acceptance suite.

Usage:
    python benchmarks/bench_kernels.py
    python benchmarks/bench_kernels.py --scheme ex-3.2 --q 13 --n 12 --r 2 --d 5 --repeats 3
"""

from __future__ import annotations

import argparse
import os
import statistics
import time

from cyclic_lrc import kernels
from cyclic_lrc.constructions import ALL_SCHEMES, construct
from cyclic_lrc.cyclic import min_distance_exhaustive


def time_backend(backend: str, code, repeats: int) -> tuple[float, int]:
    os.environ[kernels.BACKEND_ENV] = backend
    # warm up (includes numba compilation on first use)
    min_distance_exhaustive(code.base)
    samples = []
    value = None
    for _ in range(repeats):
        t0 = time.perf_counter()
        scan = min_distance_exhaustive(code.base)
        samples.append(time.perf_counter() - t0)
        value = scan.value
    return statistics.median(samples), value


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--scheme", default="ex-3.2", choices=ALL_SCHEMES)
    parser.add_argument("--q", type=int, default=13)
    parser.add_argument("--n", type=int, default=12)
    parser.add_argument("--r", type=int, default=2)
    parser.add_argument("--d", type=int, default=5)
    parser.add_argument("--repeats", type=int, default=3)
    args = parser.parse_args()

    needs_d = args.scheme in ("ex-3.2", "ex-3.3")
    code = construct(
        args.scheme,
        args.q,
        n=None if args.scheme == "thm-3.4" else args.n,
        r=args.r,
        d=args.d if needs_d else None,
    )
    total = code.q**code.k - 1
    print(f"instance: [{code.n}, {code.k}, {code.d_claimed}] over GF({code.q})")
    print(f"codewords enumerated per scan: {total}")

    results = {}
    for backend in ("numpy",) + (("numba",) if kernels.HAVE_NUMBA else ()):
        elapsed, value = time_backend(backend, code, args.repeats)
        results[backend] = (elapsed, value)
        rate = total / elapsed if elapsed else float("inf")
        print(f"{backend:>6}: d = {value}, median {elapsed:.3f}s, {rate / 1e6:.1f}M codewords/s")

    values = {v for _, v in results.values()}
    if len(values) != 1:
        print(f"BACKEND DISAGREEMENT: {results}")
        return 1
    if len(results) == 2:
        speedup = results["numpy"][0] / results["numba"][0]
        print(f"numba speedup over numpy: {speedup:.1f}x")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
