"""Combinatorial graphs with a fixed lexicographic edge order.

Vertices are labeled 1..v; the edge order fixes the component order of every
distance vector downstream, so it is part of the contract, not a convenience.
Includes the plane combinatorial rigidity oracles (Laman count check and the
(2,3)-pebble game).
"""

from __future__ import annotations

from itertools import combinations
from typing import Iterable, Sequence

from .errors import ParseError

__all__ = [
    "Graph",
    "complete_graph",
    "is_connected",
    "spanning_tree",
    "laman_check",
    "independent_edge_count_2_3",
    "pebble_game_2_3",
    "MINIMALLY_RIGID",
    "RIGID_WITH_REDUNDANCY",
    "FLEXIBLE",
    "parse_graph",
    "load_graph",
]

MINIMALLY_RIGID = "minimally-rigid"
RIGID_WITH_REDUNDANCY = "rigid-with-redundancy"
FLEXIBLE = "flexible"


class Graph:
    """An undirected graph on vertices 1..num_vertices with sorted edges."""

    __slots__ = ("num_vertices", "edges")

    def __init__(self, num_vertices: int, edges: Iterable[Sequence[int]] = ()):
        if num_vertices < 1:
            raise ValueError("need at least one vertex")
        normalized = []
        for edge in edges:
            i, j = int(edge[0]), int(edge[1])
            if i == j:
                raise ValueError(f"self-loop ({i},{j}) not allowed")
            if i > j:
                i, j = j, i
            if not (1 <= i < j <= num_vertices):
                raise ValueError(f"edge ({i},{j}) out of range 1..{num_vertices}")
            normalized.append((i, j))
        ordered = tuple(sorted(normalized))
        for a, b in zip(ordered, ordered[1:]):
            if a == b:
                raise ValueError(f"duplicate edge {a}")
        object.__setattr__(self, "num_vertices", num_vertices)
        object.__setattr__(self, "edges", ordered)

    @property
    def m(self) -> int:
        return len(self.edges)

    def __setattr__(self, name, value):
        raise AttributeError("Graph is immutable")

    def __eq__(self, other):
        return (
            isinstance(other, Graph)
            and self.num_vertices == other.num_vertices
            and self.edges == other.edges
        )

    def __hash__(self):
        return hash((self.num_vertices, self.edges))

    def __repr__(self):
        return f"Graph(v={self.num_vertices}, m={self.m})"

    def adjacency(self) -> dict[int, list[int]]:
        adj: dict[int, list[int]] = {v: [] for v in range(1, self.num_vertices + 1)}
        for i, j in self.edges:
            adj[i].append(j)
            adj[j].append(i)
        return adj

    def subgraph(self, edges: Iterable[Sequence[int]]) -> "Graph":
        """Same vertex set, a subset of edges (validated against this graph)."""
        chosen = Graph(self.num_vertices, edges)
        own = set(self.edges)
        for edge in chosen.edges:
            if edge not in own:
                raise ValueError(f"edge {edge} is not in the graph")
        return chosen

    def without_edge(self, edge: Sequence[int]) -> "Graph":
        i, j = min(edge), max(edge)
        if (i, j) not in self.edges:
            raise ValueError(f"edge ({i},{j}) is not in the graph")
        return Graph(self.num_vertices, [e for e in self.edges if e != (i, j)])


def complete_graph(v: int) -> Graph:
    """K_v with all C(v,2) edges in lexicographic order."""
    if v < 2:
        raise ValueError("a complete graph needs at least two vertices")
    return Graph(v, combinations(range(1, v + 1), 2))


def is_connected(g: Graph) -> bool:
    adj = g.adjacency()
    seen = {1}
    stack = [1]
    while stack:
        node = stack.pop()
        for nbr in adj[node]:
            if nbr not in seen:
                seen.add(nbr)
                stack.append(nbr)
    return len(seen) == g.num_vertices


def spanning_tree(g: Graph) -> Graph:
    """The lexicographically first spanning tree (greedy over sorted edges)."""
    if not is_connected(g):
        raise ValueError("spanning tree of a disconnected graph")
    parent = list(range(g.num_vertices + 1))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    chosen = []
    for i, j in g.edges:
        ri, rj = find(i), find(j)
        if ri != rj:
            parent[ri] = rj
            chosen.append((i, j))
            if len(chosen) == g.num_vertices - 1:
                break
    return Graph(g.num_vertices, chosen)


def laman_check(g: Graph) -> bool:
    """Exhaustive plane minimal-rigidity count check.

    True iff m = 2v - 3 and every induced subgraph on v' >= 2 vertices has at
    most 2v' - 3 edges. Exponential in v; the trusted oracle for small graphs
    (intended for v <= 12). The pebble game is the scalable equivalent.
    """
    v = g.num_vertices
    if v < 2:
        raise ValueError("need at least two vertices")
    if g.m != 2 * v - 3:
        return False
    edges = g.edges
    vertices = range(1, v + 1)
    for size in range(2, v):
        limit = 2 * size - 3
        for subset in combinations(vertices, size):
            inside = set(subset)
            count = 0
            for i, j in edges:
                if i in inside and j in inside:
                    count += 1
                    if count > limit:
                        return False
    return True


def _find_pebble(start: int, blocked: set[int], pebbles: list[int], out: dict[int, set[int]]) -> bool:
    """Directed search for a free pebble; reverses the path that reaches it."""
    seen = {start}
    path: dict[int, int] = {}
    stack = [start]
    while stack:
        node = stack.pop()
        for nbr in sorted(out[node]):
            if nbr in seen:
                continue
            seen.add(nbr)
            path[nbr] = node
            if pebbles[nbr] > 0 and nbr not in blocked:
                pebbles[nbr] -= 1
                pebbles[start] += 1
                # reverse the directed edges along the discovered path
                cur = nbr
                while cur != start:
                    prev = path[cur]
                    out[prev].remove(cur)
                    out[cur].add(prev)
                    cur = prev
                return True
            stack.append(nbr)
    return False


def independent_edge_count_2_3(g: Graph) -> int:
    """Number of independent edges under the (2,3)-pebble game.

    Each vertex starts with two pebbles; an edge is accepted iff four pebbles
    can be gathered on its endpoints, and acceptance consumes one. The count
    equals the rank of the graph in the generic plane rigidity matroid.
    """
    if g.num_vertices < 2:
        raise ValueError("need at least two vertices")
    pebbles = [0] + [2] * g.num_vertices
    out: dict[int, set[int]] = {v: set() for v in range(1, g.num_vertices + 1)}
    accepted = 0
    for i, j in g.edges:
        blocked = {i, j}
        while pebbles[i] + pebbles[j] < 4:
            if not (_find_pebble(i, blocked, pebbles, out) or _find_pebble(j, blocked, pebbles, out)):
                break
        if pebbles[i] + pebbles[j] >= 4:
            pebbles[i] -= 1
            out[i].add(j)
            accepted += 1
    return accepted


def pebble_game_2_3(g: Graph) -> str:
    """Plane generic-rigidity classification by the (2,3)-pebble game."""
    v = g.num_vertices
    independent = independent_edge_count_2_3(g)
    target = 2 * v - 3
    if independent == target:
        return MINIMALLY_RIGID if g.m == target else RIGID_WITH_REDUNDANCY
    return FLEXIBLE


def parse_graph(text: str, source: str = "<string>") -> Graph:
    """Parse the graph file format: "v <count>" then one "i j" edge per line."""
    num_vertices = None
    edges = []
    seen = set()
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if num_vertices is None:
            if len(parts) != 2 or parts[0] != "v" or not parts[1].isdigit():
                raise ParseError("expected header 'v <num_vertices>'", source, lineno)
            num_vertices = int(parts[1])
            if num_vertices < 1:
                raise ParseError("vertex count must be positive", source, lineno)
            continue
        if len(parts) != 2:
            raise ParseError(f"expected edge 'i j', got {line!r}", source, lineno)
        try:
            i, j = int(parts[0]), int(parts[1])
        except ValueError:
            raise ParseError(f"non-integer edge endpoint in {line!r}", source, lineno)
        key = (min(i, j), max(i, j))
        if key in seen:
            raise ParseError(f"duplicate edge {key}", source, lineno)
        seen.add(key)
        try:
            Graph(num_vertices, [key])
        except ValueError as exc:
            raise ParseError(str(exc), source, lineno)
        edges.append(key)
    if num_vertices is None:
        raise ParseError("missing 'v <num_vertices>' header", source)
    return Graph(num_vertices, edges)


def load_graph(path) -> Graph:
    with open(path, "r", encoding="utf-8") as handle:
        return parse_graph(handle.read(), source=str(path))
