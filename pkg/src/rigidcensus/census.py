"""Exact enumeration of graph-distance sets, fibers, pins, and distance energy.

Every census keys on squared distances: counts agree with the unsquared
formulation because squaring is injective componentwise on nonnegative
values, and the keys stay exact rationals.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass
from typing import NamedTuple, Optional

from . import kernels
from ._kernels_pure import normalize_value, squared_distance_of_rows, coordinate_rows
from .geometry import Point, PointSet
from .graphs import Graph, is_connected, spanning_tree

__all__ = [
    "CensusReport",
    "PinReport",
    "EnergyReport",
    "TreeProjection",
    "graph_distance_census",
    "pinned_distance_set",
    "rich_pins_greedy",
    "distance_energy",
    "tree_projection_bound",
]


@dataclass(frozen=True)
class CensusReport:
    """Distinct distance vectors of a graph over E^(k+1), with optional fibers."""

    graph: Graph
    n: int
    dim: int
    include_degenerate: bool
    tuples_enumerated: int
    tuples_counted: int
    count: int
    fibers: Optional[dict] = None

    def as_dict(self) -> dict:
        data = {
            "graph": {"v": self.graph.num_vertices, "m": self.graph.m,
                      "edges": [list(e) for e in self.graph.edges]},
            "n": self.n,
            "d": self.dim,
            "k": self.graph.num_vertices - 1,
            "include_degenerate": self.include_degenerate,
            "tuples_enumerated": self.tuples_enumerated,
            "tuples_counted": self.tuples_counted,
            "count": self.count,
        }
        return data


def graph_distance_census(
    g: Graph,
    E: PointSet,
    include_degenerate: bool = True,
    fibers: bool = False,
    budget=None,
    threads: int = 1,
    backend=None,
) -> CensusReport:
    """Count distinct squared-distance vectors of g over all tuples in E^(k+1).

    Degenerate tuples (repeated points) are included by default; the excluded
    variant is available by flag. A disconnected graph is computed with a
    warning (the census is still well defined).
    """
    if not is_connected(g):
        warnings.warn(
            "graph is disconnected; census computed anyway", stacklevel=2
        )
    counts, enumerated = kernels.graph_census_counts(
        E, g, include_degenerate=include_degenerate, budget=budget, threads=threads,
        backend=backend,
    )
    counted = sum(counts.values())
    return CensusReport(
        graph=g,
        n=len(E),
        dim=E.dim,
        include_degenerate=include_degenerate,
        tuples_enumerated=enumerated,
        tuples_counted=counted,
        count=len(counts),
        fibers=dict(counts) if fibers else None,
    )


def pinned_distance_set(E: PointSet, x: Point) -> frozenset:
    """Distinct nonzero squared distances from the pin x to the rest of E."""
    if x not in E:
        raise ValueError("pin must belong to the point set")
    xr = tuple(normalize_value(c) for c in x.coords)
    out = set()
    for p in coordinate_rows(E.points):
        if p != xr:
            out.add(squared_distance_of_rows(xr, p))
    return frozenset(out)


@dataclass(frozen=True)
class PinReport:
    """Greedy rich-pin extraction: (pin, richness at extraction) in order."""

    pins: tuple  # of (Point, int)

    @property
    def richness_sequence(self) -> tuple:
        return tuple(r for _, r in self.pins)

    @property
    def richness_histogram(self) -> dict:
        hist: dict[int, int] = {}
        for _, r in self.pins:
            hist[r] = hist.get(r, 0) + 1
        return dict(sorted(hist.items()))

    def as_dict(self) -> dict:
        return {
            "pins": [
                {"point": [str(c) for c in p.coords], "richness": r}
                for p, r in self.pins
            ],
            "richness_sequence": list(self.richness_sequence),
            "richness_histogram": {str(k): v for k, v in self.richness_histogram.items()},
        }


def rich_pins_greedy(E: PointSet, count: int) -> PinReport:
    """Repeatedly extract a maximum-richness pin (ties broken by input order),
    recording its richness inside the current, shrinking set."""
    n = len(E)
    if not (1 <= count <= n - 1):
        raise ValueError(f"count must be between 1 and n-1 = {n - 1}")
    points = list(E.points)
    rows = coordinate_rows(points)
    # per-point multiplicity of each squared distance to the current set
    tallies: list[dict] = [dict() for _ in range(n)]
    for i in range(n):
        for j in range(i + 1, n):
            v = squared_distance_of_rows(rows[i], rows[j])
            tallies[i][v] = tallies[i].get(v, 0) + 1
            tallies[j][v] = tallies[j].get(v, 0) + 1
    alive = list(range(n))
    pins = []
    for _ in range(count):
        best = max(alive, key=lambda i: len(tallies[i]))  # max keeps first tie
        pins.append((points[best], len(tallies[best])))
        alive.remove(best)
        for i in alive:
            v = squared_distance_of_rows(rows[i], rows[best])
            left = tallies[i][v] - 1
            if left:
                tallies[i][v] = left
            else:
                del tallies[i][v]
    return PinReport(tuple(pins))


class EnergyReport(NamedTuple):
    """Quadruple count Q, ordered pair count, and distinct nonzero distances."""

    quadruples: int
    ordered_pairs: int
    distinct_nonzero: int


def distance_energy(E: PointSet, threads: int = 1, backend=None) -> EnergyReport:
    """Q = number of ordered quadruples (x, y, x', y') with equal nonzero pair
    distance, computed from the distance multiplicity histogram in O(n^2).

    Zero-length pairs (x = y) are excluded from Q by definition here.
    """
    n = len(E)
    if n < 2:
        raise ValueError("distance energy needs at least two points")
    counts = kernels.pair_counts(E, threads=threads, backend=backend)
    q = sum((2 * c) ** 2 for c in counts.values())
    return EnergyReport(q, n * n - n, len(counts))


class TreeProjection(NamedTuple):
    tree_count: int
    full_count: int
    tree: Graph


def tree_projection_bound(
    g: Graph, E: PointSet, budget=None, threads: int = 1, backend=None
) -> TreeProjection:
    """Census sizes for a spanning tree of g and for g itself; the tree census
    never exceeds the full census (its keys are coordinate projections)."""
    tree = spanning_tree(g)
    tree_count = graph_distance_census(
        tree, E, budget=budget, threads=threads, backend=backend
    ).count
    full_count = graph_distance_census(
        g, E, budget=budget, threads=threads, backend=backend
    ).count
    assert tree_count <= full_count
    return TreeProjection(tree_count, full_count, tree)
