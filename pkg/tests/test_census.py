import random

import pytest

from oracles import (
    naive_energy,
    naive_graph_census,
    naive_pair_multiplicities,
    naive_pinned,
)
from rigidcensus.census import (
    distance_energy,
    graph_distance_census,
    pinned_distance_set,
    rich_pins_greedy,
    tree_projection_bound,
)
from rigidcensus.errors import BudgetExceededError
from rigidcensus.geometry import Point, PointSet, lattice_point_set
from rigidcensus.graphs import Graph, complete_graph

TRIANGLE = complete_graph(3)
HINGE = Graph(3, [(1, 2), (2, 3)])
K2 = complete_graph(2)


def random_set(rng, n, bound=9):
    pts = set()
    while len(pts) < n:
        pts.add((rng.randint(-bound, bound), rng.randint(-bound, bound)))
    return PointSet(sorted(pts))


def test_census_examples(unit_square):
    assert graph_distance_census(K2, lattice_point_set(2)).count == 6
    assert graph_distance_census(K2, lattice_point_set(2), include_degenerate=False).count == 5
    assert graph_distance_census(TRIANGLE, unit_square).count == 10
    assert graph_distance_census(HINGE, unit_square).count == 9


def test_census_fibers_conservation(unit_square):
    report = graph_distance_census(TRIANGLE, unit_square, fibers=True)
    assert report.tuples_enumerated == 64
    assert sum(report.fibers.values()) == 64
    assert len(report.fibers) == report.count
    # excluding repeats counts ordered injective tuples only
    strict = graph_distance_census(TRIANGLE, unit_square, fibers=True, include_degenerate=False)
    assert sum(strict.fibers.values()) == 4 * 3 * 2


def test_census_matches_naive_oracle():
    rng = random.Random(3)
    for _ in range(8):
        n = rng.randint(3, 7)
        E = random_set(rng, n)
        pts = [tuple(int(c) for c in p.coords) for p in E.points]
        g = rng.choice([TRIANGLE, HINGE, K2, complete_graph(4).without_edge((1, 2))])
        include = rng.random() < 0.5
        report = graph_distance_census(g, E, include_degenerate=include, fibers=True)
        oracle = naive_graph_census(pts, g.edges, include_degenerate=include)
        assert report.count == len(oracle)
        assert report.fibers == oracle


def test_census_disconnected_warns():
    g = Graph(4, [(1, 2), (3, 4)])
    with pytest.warns(UserWarning):
        report = graph_distance_census(g, lattice_point_set(1))
    assert report.count > 0


def test_census_budget():
    with pytest.raises(BudgetExceededError) as err:
        graph_distance_census(TRIANGLE, lattice_point_set(3), budget=100)
    assert err.value.required == 16**3
    # exactly at the budget is allowed
    graph_distance_census(TRIANGLE, lattice_point_set(1), budget=64)


def test_pinned_distance_set_examples():
    lat = lattice_point_set(2)
    corner = Point((0, 0))
    center = Point((1, 1))
    assert pinned_distance_set(lat, corner) == frozenset({1, 2, 4, 5, 8})
    assert pinned_distance_set(lat, center) == frozenset({1, 2})
    two = PointSet([(0, 0), (3, 4)])
    assert len(pinned_distance_set(two, Point((0, 0)))) == 1


def test_pinned_requires_membership():
    with pytest.raises(ValueError):
        pinned_distance_set(lattice_point_set(1), Point((9, 9)))


def test_pinned_matches_naive():
    rng = random.Random(7)
    for _ in range(10):
        E = random_set(rng, rng.randint(3, 9))
        pts = [tuple(int(c) for c in p.coords) for p in E.points]
        pin = rng.choice(pts)
        assert pinned_distance_set(E, Point(pin)) == naive_pinned(pts, pin)


def test_rich_pins_examples(unit_square):
    assert rich_pins_greedy(unit_square, 3).richness_sequence == (2, 2, 1)
    collinear = PointSet([(0, 0), (1, 0), (2, 0)])
    assert rich_pins_greedy(collinear, 2).richness_sequence == (2, 1)
    two = PointSet([(0, 0), (5, 5)])
    assert rich_pins_greedy(two, 1).richness_sequence == (1,)


def test_rich_pins_first_step_is_max_richness():
    lat = lattice_point_set(2)
    report = rich_pins_greedy(lat, 1)
    pin, richness = report.pins[0]
    assert richness == 5
    assert richness == max(len(pinned_distance_set(lat, p)) for p in lat)
    assert pin == lat.points[0]  # tie broken by input order


def test_rich_pins_richness_matches_recomputation():
    # each recorded richness equals the pinned set size inside the shrinking set
    rng = random.Random(11)
    E = random_set(rng, 9)
    report = rich_pins_greedy(E, 6)
    remaining = list(E.points)
    for pin, richness in report.pins:
        current = PointSet(remaining)
        assert richness == len(pinned_distance_set(current, pin))
        remaining.remove(pin)


def test_rich_pins_count_range():
    with pytest.raises(ValueError):
        rich_pins_greedy(lattice_point_set(1), 4)
    with pytest.raises(ValueError):
        rich_pins_greedy(lattice_point_set(1), 0)


def test_energy_examples(unit_square):
    collinear = PointSet([(0, 0), (1, 0), (2, 0)])
    q, pairs, distinct = distance_energy(collinear)
    assert (q, pairs, distinct) == (20, 6, 2)
    assert pairs**2 <= distinct * q
    q, pairs, distinct = distance_energy(unit_square)
    assert (q, pairs, distinct) == (80, 12, 2)
    assert pairs**2 <= distinct * q
    two = PointSet([(0, 0), (7, 1)])
    assert distance_energy(two).quadruples == 4


def test_energy_matches_naive_quadruple_loop():
    rng = random.Random(13)
    for _ in range(6):
        E = random_set(rng, rng.randint(2, 8))
        pts = [tuple(int(c) for c in p.coords) for p in E.points]
        report = distance_energy(E)
        assert report.quadruples == naive_energy(pts)
        assert report.distinct_nonzero == len(naive_pair_multiplicities(pts))


def test_energy_cauchy_schwarz_everywhere():
    rng = random.Random(17)
    sets = [random_set(rng, rng.randint(2, 30), bound=40) for _ in range(20)]
    sets += [lattice_point_set(s) for s in range(1, 9)]
    for E in sets:
        q, pairs, distinct = distance_energy(E)
        assert pairs**2 <= distinct * q


def test_tree_projection_examples(unit_square):
    tree_count, full_count, tree = tree_projection_bound(TRIANGLE, unit_square)
    assert (tree_count, full_count) == (9, 10)
    assert tree.m == 2
    # a tree projects onto itself
    t, f, _ = tree_projection_bound(HINGE, unit_square)
    assert t == f


def test_tree_projection_k4():
    rng = random.Random(19)
    E = random_set(rng, 4)
    t, f, _ = tree_projection_bound(complete_graph(4), E)
    assert t <= f


def test_subgraph_monotonicity():
    import warnings

    rng = random.Random(23)
    for _ in range(10):
        E = random_set(rng, rng.randint(3, 10))
        g_edges = [e for e in complete_graph(3).edges if rng.random() < 0.9] or [(1, 2)]
        g = Graph(3, g_edges)
        sub_edges = [e for e in g.edges if rng.random() < 0.7]
        if not sub_edges:
            continue
        h = Graph(3, sub_edges)
        with warnings.catch_warnings():
            warnings.simplefilter("ignore")  # disconnected subgraphs still count
            ch = graph_distance_census(h, E).count
            cg = graph_distance_census(g, E).count
        assert ch <= cg


def test_hinge_pin_inequality():
    rng = random.Random(29)
    sets = [random_set(rng, rng.randint(3, 12)) for _ in range(10)]
    sets.append(lattice_point_set(2))
    for E in sets:
        count = graph_distance_census(HINGE, E).count
        best = max(len(pinned_distance_set(E, p)) for p in E)
        assert count >= best**2


def test_product_bound():
    # at most (|distinct nonzero| + 1) values per key coordinate
    rng = random.Random(31)
    for _ in range(8):
        E = random_set(rng, rng.randint(3, 9))
        distinct = distance_energy(E).distinct_nonzero
        for g in (TRIANGLE, HINGE, complete_graph(4)):
            count = graph_distance_census(g, E).count
            assert count <= (distinct + 1) ** g.m
