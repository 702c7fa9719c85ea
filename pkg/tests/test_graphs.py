import pytest

from rigidcensus.errors import ParseError
from rigidcensus.graphs import (
    FLEXIBLE,
    MINIMALLY_RIGID,
    RIGID_WITH_REDUNDANCY,
    Graph,
    complete_graph,
    independent_edge_count_2_3,
    is_connected,
    laman_check,
    parse_graph,
    pebble_game_2_3,
    spanning_tree,
)


def atlas_connected_graphs(max_vertices):
    """All connected graphs up to isomorphism with 2..max_vertices vertices."""
    import networkx as nx

    out = []
    for G in nx.graph_atlas_g():
        v = G.number_of_nodes()
        if 2 <= v <= max_vertices and nx.is_connected(G):
            relabel = {node: i + 1 for i, node in enumerate(sorted(G.nodes()))}
            out.append(Graph(v, [(relabel[a], relabel[b]) for a, b in G.edges()]))
    return out


def test_complete_graph_edges():
    assert complete_graph(2).edges == ((1, 2),)
    assert complete_graph(3).edges == ((1, 2), (1, 3), (2, 3))
    k4 = complete_graph(4)
    assert k4.m == 6
    assert k4.edges[0] == (1, 2) and k4.edges[-1] == (3, 4)


def test_complete_graph_too_small():
    with pytest.raises(ValueError):
        complete_graph(1)


def test_graph_normalizes_and_validates():
    g = Graph(3, [(3, 1), (2, 1)])
    assert g.edges == ((1, 2), (1, 3))
    with pytest.raises(ValueError):
        Graph(3, [(1, 1)])
    with pytest.raises(ValueError):
        Graph(3, [(1, 4)])
    with pytest.raises(ValueError):
        Graph(3, [(1, 2), (2, 1)])


def test_edge_order_strictly_increasing():
    for v in range(2, 8):
        edges = complete_graph(v).edges
        assert all(a < b for a, b in zip(edges, edges[1:]))


def test_is_connected():
    assert is_connected(complete_graph(3))
    assert is_connected(Graph(3, [(1, 2), (2, 3)]))
    assert not is_connected(Graph(4, [(1, 2)]))


def test_spanning_tree_examples():
    assert spanning_tree(complete_graph(3)).edges == ((1, 2), (1, 3))
    p3 = Graph(3, [(1, 2), (2, 3)])
    assert spanning_tree(p3) == p3
    k4_tree = spanning_tree(complete_graph(4))
    assert k4_tree.m == 3


def test_spanning_tree_properties():
    for g in atlas_connected_graphs(6):
        tree = spanning_tree(g)
        assert tree.m == g.num_vertices - 1
        assert set(tree.edges) <= set(g.edges)
        assert is_connected(tree)


def test_spanning_tree_disconnected():
    with pytest.raises(ValueError):
        spanning_tree(Graph(4, [(1, 2)]))


def test_laman_examples():
    assert laman_check(complete_graph(3))
    assert not laman_check(complete_graph(4))
    assert laman_check(complete_graph(4).without_edge((3, 4)))


def test_pebble_game_examples():
    assert pebble_game_2_3(complete_graph(3)) == MINIMALLY_RIGID
    assert pebble_game_2_3(complete_graph(4)) == RIGID_WITH_REDUNDANCY
    assert independent_edge_count_2_3(complete_graph(4)) == 5
    assert pebble_game_2_3(Graph(3, [(1, 2), (2, 3)])) == FLEXIBLE
    assert pebble_game_2_3(complete_graph(2)) == MINIMALLY_RIGID


def test_pebble_matches_laman_up_to_six_vertices():
    for g in atlas_connected_graphs(6):
        assert (pebble_game_2_3(g) == MINIMALLY_RIGID) == laman_check(g)


def test_parse_graph():
    g = parse_graph("v 4\n1 2\n2 3\n3 4\n1 4\n")
    assert g.num_vertices == 4
    assert g.edges == ((1, 2), (1, 4), (2, 3), (3, 4))


def test_parse_graph_errors():
    with pytest.raises(ParseError):
        parse_graph("")
    with pytest.raises(ParseError):
        parse_graph("4\n1 2\n")
    with pytest.raises(ParseError) as err:
        parse_graph("v 3\n1 2\n2 1\n")
    assert "duplicate" in str(err.value)
    with pytest.raises(ParseError):
        parse_graph("v 3\n1 5\n")
    with pytest.raises(ParseError):
        parse_graph("v 3\n1 two\n")
