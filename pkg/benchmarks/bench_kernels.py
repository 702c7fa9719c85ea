#!/usr/bin/env python3
"""Benchmark the compiled enumeration kernels against the pure-Python fallback.

Each case runs both backends on identical inputs, checks that the results
match exactly, and reports wall times and the speedup.

Usage: python benchmarks/bench_kernels.py [--quick]
"""

import argparse
import time

from rigidcensus import kernels
from rigidcensus.geometry import lattice_point_set, random_point_set
from rigidcensus.graphs import Graph, complete_graph


def time_call(fn, repeats=1):
    best = None
    result = None
    for _ in range(repeats):
        start = time.perf_counter()
        result = fn()
        elapsed = time.perf_counter() - start
        best = elapsed if best is None else min(best, elapsed)
    return best, result


def cases(quick: bool):
    tri = complete_graph(3)
    hinge = Graph(3, [(1, 2), (2, 3)])
    scale = 0.5 if quick else 1.0
    n_census = int(40 * scale) or 8
    n_big = int(70 * scale) or 12
    lat = 12 if quick else 20
    yield (
        f"pair histogram, lattice s={lat} (n={(lat + 1) ** 2})",
        lambda backend: kernels.pair_counts(lattice_point_set(lat), backend=backend),
    )
    E = random_point_set(n_census, 2, 10**6, seed=1)
    yield (
        f"triangle census, random n={n_census} ({n_census ** 3} tuples)",
        lambda backend: kernels.graph_census_counts(E, tri, backend=backend)[0],
    )
    slat = 4 if quick else 6
    E_lat = lattice_point_set(slat)
    n_lat = len(E_lat)
    yield (
        f"triangle census, lattice s={slat} ({n_lat ** 3} tuples)",
        lambda backend: kernels.graph_census_counts(E_lat, tri, backend=backend)[0],
    )
    E_big = random_point_set(n_big, 2, 10**6, seed=2)
    yield (
        f"hinge census, random n={n_big} ({n_big ** 3} tuples)",
        lambda backend: kernels.graph_census_counts(E_big, hinge, backend=backend)[0],
    )
    yield (
        f"congruence census SO, k=2, random n={n_census}",
        lambda backend: kernels.congruence_counts(E, 2, group="SO", backend=backend)[2],
    )


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--quick", action="store_true", help="smaller instances")
    args = parser.parse_args()

    if not kernels.compiled_available():
        print("compiled kernels are NOT available; timing the pure backend only")
    # warm up both backends (first compiled call pays the numpy import)
    warm = lattice_point_set(2)
    kernels.pair_counts(warm, backend="pure")
    if kernels.compiled_available():
        kernels.pair_counts(warm, backend="compiled")
    print(f"{'case':<52} {'pure':>9} {'compiled':>9} {'speedup':>8}")
    for name, runner in cases(args.quick):
        pure_t, pure_result = time_call(lambda: runner("pure"))
        if kernels.compiled_available():
            fast_t, fast_result = time_call(lambda: runner("compiled"))
            if fast_result != pure_result:
                raise SystemExit(f"backend mismatch in case: {name}")
            print(f"{name:<52} {pure_t:>8.3f}s {fast_t:>8.3f}s {pure_t / fast_t:>7.1f}x")
        else:
            print(f"{name:<52} {pure_t:>8.3f}s {'-':>9} {'-':>8}")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
