"""Backend selection and work partitioning for the enumeration kernels.

A compiled extension handles the hot loops when it is importable AND the
point set is integer-valued with coordinates small enough that every squared
distance and prefix determinant fits in a signed 64-bit integer. Everything
else (rational coordinates, huge coordinates, the any-order census variant,
or a build without the extension) runs the pure-Python kernels. Both
backends enumerate tuples in the same order and produce identical maps.

Set RIGIDCENSUS_PURE=1 to ignore the extension entirely.
"""

from __future__ import annotations

import math
import os
from concurrent.futures import ThreadPoolExecutor
from functools import partial

from . import _kernels_pure as _pure
from .errors import BudgetExceededError
from .geometry import PointSet
from .graphs import Graph

__all__ = [
    "DEFAULT_TUPLE_BUDGET",
    "compiled_available",
    "backend_name",
    "pair_counts",
    "graph_census_counts",
    "congruence_counts",
]

DEFAULT_TUPLE_BUDGET = 100_000_000
TABLE_LIMIT = _pure.TABLE_LIMIT
_INT64_MAX = 2**63 - 1

if os.environ.get("RIGIDCENSUS_PURE"):
    _fast = None
else:
    try:
        from . import _kernels_fast as _fast  # type: ignore[no-redef]
    except ImportError:
        _fast = None


def compiled_available() -> bool:
    return _fast is not None


def backend_name() -> str:
    return "compiled" if _fast is not None else "pure"


def _max_abs_coordinate(d: int, need_det: bool) -> int:
    # squared distances: d * (2B)^2 must fit
    bound = math.isqrt(_INT64_MAX // d) // 2
    if need_det and d >= 2:
        # prefix determinants: d! * (2B)^d must fit
        budget = _INT64_MAX // math.factorial(d)
        side = int(round(budget ** (1.0 / d)))
        while side**d > budget:
            side -= 1
        bound = min(bound, side // 2)
    return bound


def _int_rows(ps: PointSet, need_det: bool):
    """Integer coordinate rows if the set is int64-kernel eligible, else None."""
    limit = _max_abs_coordinate(ps.dim, need_det)
    rows = []
    for p in ps.points:
        row = []
        for c in p.coords:
            if c.denominator != 1 or abs(c.numerator) > limit:
                return None
            row.append(int(c))
        rows.append(row)
    return rows


def _resolve_backend(requested, ps: PointSet, need_det: bool, k1: int = 2):
    """Return ("compiled", int_rows) or ("pure", None)."""
    if requested not in (None, "pure", "compiled"):
        raise ValueError(f"unknown backend {requested!r}")
    if requested == "pure":
        return "pure", None
    eligible = None
    if _fast is not None or requested == "compiled":
        eligible = _int_rows(ps, need_det)
        if need_det and ps.dim > 4:
            eligible = None
        if k1 > 12:
            eligible = None
    if requested == "compiled":
        if _fast is None:
            raise ValueError("compiled backend is not available in this build")
        if eligible is None:
            raise ValueError(
                "point set is not eligible for the compiled backend "
                "(needs int64-safe integer coordinates)"
            )
        return "compiled", eligible
    if _fast is not None and eligible is not None:
        return "compiled", eligible
    return "pure", None


def _check_budget(n: int, k1: int, budget):
    budget = DEFAULT_TUPLE_BUDGET if budget is None else budget
    total = n**k1
    if total > budget:
        raise BudgetExceededError(total, budget)
    return total


def _chunk_bounds(n: int, threads: int):
    workers = max(1, min(threads, n))
    base, extra = divmod(n, workers)
    bounds = []
    start = 0
    for i in range(workers):
        end = start + base + (1 if i < extra else 0)
        if end > start:
            bounds.append((start, end))
        start = end
    return bounds


def _run_chunks(chunk_fn, n: int, threads: int) -> list:
    bounds = _chunk_bounds(n, threads)
    if len(bounds) == 1:
        return [chunk_fn(*bounds[0])]
    with ThreadPoolExecutor(max_workers=len(bounds)) as pool:
        futures = [pool.submit(chunk_fn, lo, hi) for lo, hi in bounds]
        return [f.result() for f in futures]


def _merge_counts(parts) -> dict:
    merged: dict = {}
    for part in parts:
        for key, value in part.items():
            merged[key] = merged.get(key, 0) + value
    return merged


def _np_int64(rows):
    import numpy as np

    return np.array(rows, dtype=np.int64)


def pair_counts(ps: PointSet, threads: int = 1, backend=None) -> dict:
    """Multiplicities of nonzero squared distances over unordered point pairs."""
    name, rows = _resolve_backend(backend, ps, need_det=False)
    n = len(ps)
    if name == "compiled":
        chunk = partial(_fast.pair_counts_chunk, _np_int64(rows))
    else:
        coords = _pure.coordinate_rows(ps.points)
        chunk = partial(_pure.pair_counts_chunk, coords)
    return _merge_counts(_run_chunks(chunk, n, threads))


def graph_census_counts(
    ps: PointSet,
    g: Graph,
    include_degenerate: bool = True,
    budget=None,
    threads: int = 1,
    backend=None,
):
    """Distance-vector multiplicity map over all tuples in E^(k+1).

    Returns (counts, enumerated) where enumerated = n^(k+1) regardless of the
    degenerate-tuple flag.
    """
    n = len(ps)
    k1 = g.num_vertices
    enumerated = _check_budget(n, k1, budget)
    edge_idx = [(i - 1, j - 1) for i, j in g.edges]
    name, rows = _resolve_backend(backend, ps, need_det=False, k1=k1)
    if name == "compiled":
        chunk = partial(
            _fast.graph_census_chunk, _np_int64(rows), k1, edge_idx, include_degenerate
        )
    else:
        coords = _pure.coordinate_rows(ps.points)
        table = _pure.distance_table(coords) if n <= TABLE_LIMIT else None
        chunk = partial(
            _pure.graph_census_chunk, n, k1, table, coords, edge_idx, include_degenerate
        )
    counts = _merge_counts(_run_chunks(chunk, n, threads))
    return counts, enumerated


def congruence_counts(
    ps: PointSet,
    k: int,
    group: str = "O",
    any_order: bool = False,
    budget=None,
    threads: int = 1,
    backend=None,
):
    """Class-size map for the congruence census of (k+1)-tuples from E.

    Returns (strict_nonsingular, classified, counts). Keys are the full
    pairwise squared-distance vectors, with the prefix-frame orientation sign
    appended when group is "SO".
    """
    if group not in ("O", "SO"):
        raise ValueError("group must be 'O' or 'SO'")
    n = len(ps)
    d = ps.dim
    k1 = k + 1
    _check_budget(n, k1, budget)
    want_sign = group == "SO"
    if any_order and backend == "compiled":
        raise ValueError("the any-order census runs on the pure backend only")
    name, rows = ("pure", None) if any_order else _resolve_backend(
        backend, ps, need_det=True, k1=k1
    )
    if name == "compiled":
        chunk = partial(_fast.congruence_chunk, _np_int64(rows), k1, d, want_sign)
    else:
        coords = _pure.coordinate_rows(ps.points)
        table = _pure.distance_table(coords) if n <= TABLE_LIMIT else None
        chunk = partial(
            _pure.congruence_chunk, n, k1, d, table, coords, want_sign, any_order
        )
    parts = _run_chunks(chunk, n, threads)
    strict = sum(p[0] for p in parts)
    classified = sum(p[1] for p in parts)
    counts = _merge_counts(p[2] for p in parts)
    return strict, classified, counts
