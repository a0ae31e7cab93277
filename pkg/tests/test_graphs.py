import logging

import pytest

from errors import GraphParseError, StructuralError
from graphs import (Graph, bipartition, complete_graph, cycle_graph, is_connected, line_graph,
                    nonisomorphic_graphs, parse_dimacs, parse_edge_list, read_graph, serialize_dimacs,
                    serialize_edge_list)


def test_parse_edge_list():
    g = parse_edge_list("3 3\n1 2\n3 1\n2 3\n")
    assert g.n == 3
    assert g.edges == ((1, 2), (1, 3), (2, 3))


def test_edge_count_mismatch_names_line():
    with pytest.raises(GraphParseError) as info:
        parse_edge_list("3 3\n1 2\n2 3\n")
    assert info.value.line == 3
    assert "line 3" in str(info.value)


@pytest.mark.parametrize("text, line", [
    ("3 1\n2 2\n", 2),
    ("3 1\n1 4\n", 2),
    ("3 2\n1 2\n2 1\n", 3),
    ("3 x\n", 1),
])
def test_bad_edge_lists(text, line):
    with pytest.raises(GraphParseError) as info:
        parse_edge_list(text)
    assert info.value.line == line


def test_parse_dimacs(samples):
    g = read_graph(str(samples / "c5.dimacs"))
    assert g == cycle_graph(5)


def test_dimacs_edge_before_problem_line():
    with pytest.raises(GraphParseError) as info:
        parse_dimacs("c hi\ne 1 2\np edge 2 1\n")
    assert info.value.line == 2


def test_dimacs_negative_vertex_count():
    with pytest.raises(GraphParseError) as info:
        parse_dimacs("c empty\np edge -1 0\n")
    assert info.value.line == 2


def test_dimacs_missing_problem_line():
    with pytest.raises(GraphParseError):
        parse_dimacs("c nothing here\n")


def test_dimacs_count_mismatch_only_warns(caplog):
    with caplog.at_level(logging.WARNING):
        g = parse_dimacs("p edge 3 5\ne 1 2\n")
    assert g.edge_count == 1
    assert "announces 5 edges" in caplog.text


def test_serializers_reparse():
    g = complete_graph(4)
    assert parse_edge_list(serialize_edge_list(g)) == g
    assert parse_dimacs(serialize_dimacs(g)) == g


def test_graph_rejects_loops():
    with pytest.raises(StructuralError):
        Graph(2, ((1, 1),))


def test_bipartition(p3, k3, c4):
    parts = bipartition(p3)
    assert parts.class_a == {1, 3}
    assert parts.class_b == {2}
    assert bipartition(k3) is None
    assert len(bipartition(c4).class_a) == 2


def test_line_graph_of_star(k13):
    lg, edge_map = line_graph(k13)
    assert edge_map == ((1, 2), (1, 3), (1, 4))
    assert lg == complete_graph(3)


def test_is_connected(c4):
    assert is_connected(c4)
    assert not is_connected(Graph(3, ((1, 2),)))


def test_star_center_and_degrees(k13):
    assert k13.degree(1) == 3
    assert k13.max_degree() == 3
    assert k13.incident_edges(1) == [(1, 2), (1, 3), (1, 4)]


@pytest.mark.parametrize("n, count", [(1, 1), (2, 2), (3, 4), (4, 11)])
def test_nonisomorphic_counts(n, count):
    assert len(nonisomorphic_graphs(n)) == count


def test_read_graph_by_extension(samples):
    assert read_graph(str(samples / "k3.el")) == complete_graph(3)
    with pytest.raises(GraphParseError):
        read_graph(str(samples / "k3.el"), "dimacs")
