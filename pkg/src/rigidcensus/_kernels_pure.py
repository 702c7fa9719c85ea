"""Pure-Python enumeration kernels.

Reference implementation for the compiled extension and the only path for
point sets with non-integer rational coordinates. Chunk functions take a
half-open range [lo, hi) of the leading tuple index so callers can partition
work; results merge associatively, so any partition yields the same census.

Squared-distance keys are normalized (plain int whenever the value is
integral) so both backends produce identical dictionaries.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import combinations, permutations, product

from . import linalg

TABLE_LIMIT = 3000  # build the n x n distance table only up to this n


def normalize_value(value):
    """Exact rational as plain int when integral (shared key convention)."""
    if isinstance(value, Fraction) and value.denominator == 1:
        return int(value)
    return value


def coordinate_rows(points) -> list[tuple]:
    """Point coordinates as rows of normalized exact values."""
    return [tuple(normalize_value(c) for c in p.coords) for p in points]


def squared_distance_of_rows(p, q):
    s = 0
    for a, b in zip(p, q):
        diff = a - b
        s += diff * diff
    return normalize_value(s)


def distance_table(coords) -> list[list]:
    n = len(coords)
    table = [[0] * n for _ in range(n)]
    for i in range(n):
        pi = coords[i]
        for j in range(i + 1, n):
            v = squared_distance_of_rows(pi, coords[j])
            table[i][j] = v
            table[j][i] = v
    return table


def pair_counts_chunk(coords, lo: int, hi: int) -> dict:
    """Multiplicities of squared distances over unordered pairs {i, j}, i < j,
    with i restricted to [lo, hi)."""
    counts: dict = {}
    n = len(coords)
    for i in range(lo, hi):
        pi = coords[i]
        for j in range(i + 1, n):
            key = squared_distance_of_rows(pi, coords[j])
            counts[key] = counts.get(key, 0) + 1
    return counts


def graph_census_chunk(
    n: int,
    k1: int,
    table,
    coords,
    edge_idx,
    include_degenerate: bool,
    lo: int,
    hi: int,
) -> dict:
    """Distance-vector multiplicities over tuples with leading index in [lo, hi)."""
    counts: dict = {}
    get = counts.get
    rest = k1 - 1
    if table is not None:
        for i0 in range(lo, hi):
            for tail in product(range(n), repeat=rest):
                idx = (i0, *tail)
                if not include_degenerate and len(set(idx)) != k1:
                    continue
                key = tuple(table[idx[a]][idx[b]] for a, b in edge_idx)
                counts[key] = get(key, 0) + 1
    else:
        for i0 in range(lo, hi):
            for tail in product(range(n), repeat=rest):
                idx = (i0, *tail)
                if not include_degenerate and len(set(idx)) != k1:
                    continue
                key = tuple(
                    squared_distance_of_rows(coords[idx[a]], coords[idx[b]])
                    for a, b in edge_idx
                )
                counts[key] = get(key, 0) + 1
    return counts


def _prefix_det(coords, idx, d):
    """Determinant of the d x d matrix of differences of the first d+1 points."""
    base = coords[idx[0]]
    if d == 1:
        return coords[idx[1]][0] - base[0]
    if d == 2:
        p1, p2 = coords[idx[1]], coords[idx[2]]
        a = p1[0] - base[0]
        b = p1[1] - base[1]
        c = p2[0] - base[0]
        e = p2[1] - base[1]
        return a * e - b * c
    rows = []
    for t in range(1, d + 1):
        pt = coords[idx[t]]
        rows.append([pt[a] - base[a] for a in range(d)])
    return linalg.exact_det(rows)


def congruence_chunk(
    n: int,
    k1: int,
    d: int,
    table,
    coords,
    want_sign: bool,
    any_order: bool,
    lo: int,
    hi: int,
):
    """Congruence-class sizes over tuples with leading index in [lo, hi).

    Returns (strict_nonsingular, classified, counts): strict counts tuples
    whose leading d+1 points are affinely independent; with any_order, tuples
    that become non-singular under some reordering are classified under the
    first such permutation's key and counted in `classified` only.
    """
    counts: dict = {}
    pairs = list(combinations(range(k1), 2))
    perms = list(permutations(range(k1))) if any_order else None
    strict = 0
    classified = 0
    rest = k1 - 1
    for i0 in range(lo, hi):
        for tail in product(range(n), repeat=rest):
            idx = (i0, *tail)
            det = _prefix_det(coords, idx, d)
            if det != 0:
                strict += 1
                use = idx
            elif any_order:
                use = None
                for perm in perms:
                    candidate = tuple(idx[p] for p in perm)
                    det = _prefix_det(coords, candidate, d)
                    if det != 0:
                        use = candidate
                        break
                if use is None:
                    continue
            else:
                continue
            classified += 1
            if table is not None:
                key = tuple(table[use[a]][use[b]] for a, b in pairs)
            else:
                key = tuple(
                    squared_distance_of_rows(coords[use[a]], coords[use[b]])
                    for a, b in pairs
                )
            if want_sign:
                key = key + ((1 if det > 0 else -1),)
            counts[key] = counts.get(key, 0) + 1
    return strict, classified, counts
