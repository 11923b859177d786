from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from sparsedigraph import (
    DegreeSequence,
    Digraph,
    EdgeListError,
    degree_sequence,
    graph_stats,
    read_edge_list,
    write_edge_list,
)


def test_basic_construction():
    g = Digraph(4, [(0, 1), (1, 2), (2, 0)])
    assert g.node_count == 4
    assert g.edge_count == 3
    assert g.has_edge(0, 1)
    assert not g.has_edge(1, 0)
    assert g.edges == {(0, 1), (1, 2), (2, 0)}


def test_isolated_nodes_representable():
    g = Digraph(10, [(0, 1)])
    assert g.node_count == 10
    assert g.in_degrees().tolist() == [0, 1] + [0] * 8


@pytest.mark.parametrize(
    "node_count,edges",
    [
        (-1, []),
        (3, [(0, 3)]),
        (3, [(-1, 0)]),
        (3, [(1, 1)]),
        (3, [(0, 1), (0, 1)]),
    ],
)
def test_invalid_graphs_rejected(node_count, edges):
    with pytest.raises(ValueError):
        Digraph(node_count, edges)


def test_degrees_match_manual_count():
    edges = [(0, 1), (0, 2), (0, 3), (2, 1), (3, 1)]
    g = Digraph(5, edges)
    assert g.out_degrees().tolist() == [3, 0, 1, 1, 0]
    assert g.in_degrees().tolist() == [0, 3, 1, 1, 0]
    assert g.out_degrees().sum() == g.edge_count
    assert g.in_degrees().sum() == g.edge_count


def test_equality_ignores_edge_order():
    a = Digraph(3, [(0, 1), (1, 2)])
    b = Digraph(3, [(1, 2), (0, 1)])
    assert a == b
    assert hash(a) == hash(b)
    assert a != Digraph(4, [(0, 1), (1, 2)])
    assert a != Digraph(3, [(0, 1)])


def test_edge_array_sorted_and_copied():
    g = Digraph(3, [(2, 0), (0, 1)])
    arr = g.edge_array()
    assert arr.tolist() == [[0, 1], [2, 0]]
    arr[0, 0] = 99  # mutating the copy must not corrupt the graph
    assert g.edge_array().tolist() == [[0, 1], [2, 0]]


def test_degree_sequence_kinds():
    g = Digraph(3, [(0, 1), (2, 1)])
    s = degree_sequence(g, "in")
    assert s.kind == "in"
    assert s.values.tolist() == [0, 2, 0]
    assert len(s) == 3
    with pytest.raises(ValueError):
        degree_sequence(g, "total")
    with pytest.raises(ValueError):
        DegreeSequence(np.array([1]), "sideways")


# -- structural stats --------------------------------------------------------


def test_stats_on_path_graph():
    g = Digraph(3, [(0, 1), (1, 2)])
    s = graph_stats(g)
    assert s.node_count == 3
    assert s.edge_count == 2
    assert s.edges_per_node == Fraction(2, 3)
    assert s.weakly_connected
    assert s.diameter == 2


def test_stats_direction_ignored_for_diameter():
    # 0 -> 1 <- 2 is weakly connected with undirected diameter 2
    g = Digraph(3, [(0, 1), (2, 1)])
    s = graph_stats(g)
    assert s.weakly_connected
    assert s.diameter == 2


def test_stats_disconnected_uses_largest_component():
    g = Digraph(6, [(0, 1), (1, 2), (2, 3), (4, 5)])
    s = graph_stats(g)
    assert not s.weakly_connected
    assert s.diameter == 3


def test_stats_all_isolated():
    s = graph_stats(Digraph(4))
    assert not s.weakly_connected
    assert s.diameter is None
    assert s.edges_per_node == 0


def test_stats_single_node():
    s = graph_stats(Digraph(1))
    assert s.weakly_connected
    assert s.diameter == 0


def test_stats_exact_fraction():
    g = Digraph(266, [(i, (i + 1) % 266) for i in range(266)])
    assert graph_stats(g).edges_per_node == Fraction(266, 266)


# -- edge-list files ---------------------------------------------------------


def test_write_read_roundtrip(tmp_path):
    g = Digraph(5, [(3, 1), (0, 4), (0, 1)])
    p = tmp_path / "g.edges"
    write_edge_list(g, p)
    assert read_edge_list(p) == g


def test_write_is_byte_stable(tmp_path):
    g = Digraph(4, [(2, 1), (0, 3), (1, 2)])
    a, b = tmp_path / "a.edges", tmp_path / "b.edges"
    write_edge_list(g, a)
    write_edge_list(g, b)
    assert a.read_bytes() == b.read_bytes()
    lines = a.read_text().splitlines()
    assert lines[0] == "#nodes=4"
    assert lines[1:] == ["0 3", "1 2", "2 1"]  # sorted data rows


def test_headerless_file_infers_node_count(tmp_path):
    p = tmp_path / "plain.edges"
    p.write_text("3 4\n0 1\n")
    g = read_edge_list(p)
    assert g.node_count == 5
    assert g.edges == {(3, 4), (0, 1)}


def test_empty_file_is_empty_graph(tmp_path):
    p = tmp_path / "nothing.edges"
    p.write_text("")
    g = read_edge_list(p)
    assert g.node_count == 0
    assert g.edge_count == 0


@pytest.mark.parametrize(
    "content,fragment",
    [
        ("#nodes=x\n", "header"),
        ("#nodes=3\n0\n", "malformed line"),
        ("#nodes=3\n0 a\n", "malformed line"),
        ("#nodes=3\n0 5\n", "declared"),
        ("#nodes=3\n1 1\n", "self-loop"),
        ("#nodes=3\n0 1\n0 1\n", "duplicate"),
        ("#nodes=-2\n", "negative"),
        ("0 -1\n", "negative"),
    ],
)
def test_malformed_files_rejected(tmp_path, content, fragment):
    p = tmp_path / "bad.edges"
    p.write_text(content)
    with pytest.raises(EdgeListError) as exc:
        read_edge_list(p)
    assert fragment in str(exc.value)
    assert str(p) in str(exc.value)


def test_parse_error_names_line_number(tmp_path):
    p = tmp_path / "bad.edges"
    p.write_text("#nodes=3\n0 1\n1 nope\n")
    with pytest.raises(EdgeListError, match=r":3:"):
        read_edge_list(p)


@settings(max_examples=60, deadline=None)
@given(st.data())
def test_roundtrip_random_graphs(tmp_path_factory, data):
    n = data.draw(st.integers(min_value=0, max_value=12))
    possible = [(s, d) for s in range(n) for d in range(n) if s != d]
    edges = data.draw(st.lists(st.sampled_from(possible), unique=True, max_size=len(possible))) if possible else []
    g = Digraph(n, edges)
    p = tmp_path_factory.mktemp("rt") / "g.edges"
    write_edge_list(g, p)
    assert read_edge_list(p) == g
