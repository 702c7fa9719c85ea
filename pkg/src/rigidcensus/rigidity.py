"""Distance maps, the rigidity matrix, exact ranks, and generic classification.

The rigidity matrix is the Jacobian of the squared-distance map (the factor 2
is kept so examples are bit-reproducible). Generic ranks are certified by
evaluating at random integer tuples; the Schwartz-Zippel failure bound for
that certificate is exposed so reports can carry it.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Optional, Sequence

from . import linalg
from .geometry import ConfigTuple, Point, difference, squared_distance
from .graphs import Graph, complete_graph

__all__ = [
    "DistanceVector",
    "RigidityMatrix",
    "RigidityReport",
    "distance_map",
    "rigidity_matrix",
    "exact_rank",
    "motion_dims",
    "random_integer_tuple",
    "generic_rank",
    "generic_rank_failure_bound",
    "is_edge_set_independent",
    "classify_generic",
    "is_regular_tuple",
    "MINIMALLY_INF_RIGID",
    "INF_RIGID",
    "FLEXIBLE",
]

MINIMALLY_INF_RIGID = "minimally-infinitesimally-rigid"
INF_RIGID = "infinitesimally-rigid"
FLEXIBLE = "flexible"

COORDINATE_RANGE = 2**31  # random witness coordinates are drawn from [-2^31, 2^31]


@dataclass(frozen=True)
class DistanceVector:
    """Edge-length vector of a framework, in the graph's edge order."""

    graph: Graph
    values: tuple
    squared: bool


@dataclass(frozen=True)
class RigidityMatrix:
    """m x d(k+1) Jacobian of the squared-distance map at a tuple."""

    graph: Graph
    dim: int
    rows: tuple

    @property
    def num_rows(self) -> int:
        return len(self.rows)

    @property
    def num_cols(self) -> int:
        return self.dim * self.graph.num_vertices


@dataclass(frozen=True)
class RigidityReport:
    """Rank and motion-space dimensions of a framework at a specific tuple."""

    rank: int
    motion_dim: int
    trivial_dim: int
    inf_rigid_at_x: bool
    classification: Optional[str] = None


def _check_sizes(g: Graph, t: ConfigTuple) -> None:
    if len(t.points) != g.num_vertices:
        raise ValueError(
            f"graph has {g.num_vertices} vertices but tuple has {len(t.points)} points"
        )


def distance_map(g: Graph, t: ConfigTuple, squared: bool = True) -> DistanceVector:
    """Edge lengths of the framework (g, t); exact when squared, float otherwise."""
    _check_sizes(g, t)
    squared_values = tuple(
        squared_distance(t.points[i - 1], t.points[j - 1]) for i, j in g.edges
    )
    if squared:
        return DistanceVector(g, squared_values, True)
    return DistanceVector(g, tuple(math.sqrt(v) for v in squared_values), False)


def rigidity_matrix(g: Graph, t: ConfigTuple) -> RigidityMatrix:
    """Jacobian of the squared-distance map: row (i,j) holds 2(x^i - x^j) in
    block i and the negative in block j."""
    _check_sizes(g, t)
    d = t.dim
    rows = []
    zero = Fraction(0)
    for i, j in g.edges:
        row = [zero] * (d * g.num_vertices)
        delta = difference(t.points[i - 1], t.points[j - 1])
        for a in range(d):
            row[(i - 1) * d + a] = 2 * delta[a]
            row[(j - 1) * d + a] = -2 * delta[a]
        rows.append(tuple(row))
    return RigidityMatrix(g, d, tuple(rows))


def exact_rank(matrix) -> int:
    """Exact rank of a RigidityMatrix or of any rational row matrix."""
    rows = matrix.rows if isinstance(matrix, RigidityMatrix) else matrix
    return linalg.exact_rank(rows)


def motion_dims(g: Graph, t: ConfigTuple) -> RigidityReport:
    """Motion-space dimensions at t: kernel sizes of the framework Jacobian
    and of the complete graph's Jacobian (the trivial motions)."""
    _check_sizes(g, t)
    d = t.dim
    total = d * g.num_vertices
    rank = exact_rank(rigidity_matrix(g, t))
    complete_rank = exact_rank(rigidity_matrix(complete_graph(g.num_vertices), t))
    motion = total - rank
    trivial = total - complete_rank
    return RigidityReport(rank, motion, trivial, motion == trivial)


def random_integer_tuple(num_points: int, d: int, rng: random.Random) -> ConfigTuple:
    """A random integer tuple with coordinates uniform in [-2^31, 2^31]."""
    return ConfigTuple(
        Point(tuple(rng.randint(-COORDINATE_RANGE, COORDINATE_RANGE) for _ in range(d)))
        for _ in range(num_points)
    )


@lru_cache(maxsize=65536)
def generic_rank(g: Graph, d: int, seed: int = 0, trials: int = 3) -> int:
    """Maximum rank of the rigidity matrix over `trials` random integer tuples.

    This is the generic rank unless every sampled tuple lies on the rank-drop
    variety; see generic_rank_failure_bound for the certificate quality.
    """
    if trials < 1:
        raise ValueError("need at least one trial")
    rng = random.Random(seed)
    best = 0
    bound = min(g.m, d * g.num_vertices)
    for _ in range(trials):
        t = random_integer_tuple(g.num_vertices, d, rng)
        best = max(best, exact_rank(rigidity_matrix(g, t)))
        if best == bound:
            break
    return best


def generic_rank_failure_bound(g: Graph, d: int, trials: int = 3) -> float:
    """Schwartz-Zippel bound on the probability that generic_rank is too low.

    A maximal nonzero minor has degree at most min(m, d*v); each independent
    trial samples coordinates from 2^32 + 1 integers.
    """
    degree = min(g.m, d * g.num_vertices)
    per_trial = degree / (2 * COORDINATE_RANGE + 1)
    return min(1.0, per_trial**trials)


def is_edge_set_independent(g: Graph, edge_subset, d: int, seed: int = 0, trials: int = 3) -> bool:
    """Whether the rows of the complete-graph rigidity matrix indexed by the
    edge subset are generically independent (randomized witness)."""
    sub = Graph(g.num_vertices, edge_subset)
    return generic_rank(sub, d, seed, trials) == sub.m


def classify_generic(
    g: Graph,
    d: int,
    seed: int = 0,
    trials: int = 3,
    minimality: str = "rank",
) -> str:
    """Generic rigidity classification of a graph in dimension d.

    Rigid iff the generic rank reaches the complete graph's generic rank;
    minimal iff additionally every edge is generically essential. Two
    equivalent minimality tests are provided: "rank" (all m rows independent)
    and "removal" (every single-edge deletion loses rigidity).
    """
    v = g.num_vertices
    if v <= d:
        raise ValueError(
            f"classification needs at least d+1 = {d + 1} vertices; "
            "use motion_dims for smaller frameworks"
        )
    if minimality not in ("rank", "removal"):
        raise ValueError("minimality must be 'rank' or 'removal'")
    full_rank = generic_rank(complete_graph(v), d, seed, trials)
    rank = generic_rank(g, d, seed, trials)
    if rank < full_rank:
        return FLEXIBLE
    if minimality == "rank":
        minimal = rank == g.m
    else:
        minimal = all(
            generic_rank(g.without_edge(edge), d, seed, trials) < full_rank
            for edge in g.edges
        )
    return MINIMALLY_INF_RIGID if minimal else INF_RIGID


def is_regular_tuple(g: Graph, t: ConfigTuple, seed: int = 0, trials: int = 3) -> bool:
    """Whether the rigidity-matrix rank at t attains the generic maximum."""
    _check_sizes(g, t)
    at_tuple = exact_rank(rigidity_matrix(g, t))
    return at_tuple == generic_rank(g, t.dim, seed, trials)
