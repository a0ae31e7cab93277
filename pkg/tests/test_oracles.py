import random
from itertools import combinations

import pytest

from conftest import random_graph
from errors import OracleRefusal, StructuralError
from graphs import Graph, complete_graph, nonisomorphic_graphs
from oracles import (OracleLimits, Structure, StructureKind, enum_cagefree_subgraphs, enum_edge_colorable_subgraphs,
                     enum_homomorphic_subgraphs, enum_independent_sets, enum_k_colorable_subgraphs,
                     enum_k_regular_subgraphs, enum_matchings, enum_regular_subgraphs, enum_vertex_covers,
                     enumerate_family, is_subset_closed, max_structure_size, size_counts)


def test_independent_sets_of_triangle(k3):
    family = enum_independent_sets(k3)
    assert len(family) == 4
    assert max_structure_size(family) == 1
    assert is_subset_closed(family)


def test_matchings_of_triangle(k3):
    family = enum_matchings(k3)
    assert [family.format_member(m) for m in family.sorted_members()] == ["{}", "{x1_2}", "{x1_3}", "{x2_3}"]


def test_regular_triangle_not_closed(k3):
    family = enum_regular_subgraphs(k3)
    assert family.members == {frozenset(), frozenset({0, 1, 2})}
    check = is_subset_closed(family)
    assert not check
    outer, inner = check.witness
    assert outer == frozenset({0, 1, 2})
    assert inner not in family.members and len(inner) == 2


def test_cagefree_path(p3):
    assert enum_cagefree_subgraphs(p3).members == {frozenset()}


def test_vertex_covers_of_path(p3):
    family = enum_vertex_covers(p3)
    assert len(family) == 5
    assert frozenset({1}) in family.members
    assert not is_subset_closed(family)


def test_two_colorable_triangle(k3):
    family = enum_k_colorable_subgraphs(k3, 2)
    assert len(family) == 7
    assert frozenset({0, 1, 2}) not in family.members
    assert is_subset_closed(family)


def test_homomorphic_to_edge_equals_bipartite(k3, c4):
    for g in (k3, c4, complete_graph(4)):
        assert enum_homomorphic_subgraphs(g, complete_graph(2)).members == enum_k_colorable_subgraphs(g, 2).members


def test_edge_colorable_is_union_of_matchings(k3):
    family = enum_edge_colorable_subgraphs(k3, 2)
    assert size_counts(family) == {0: 1, 1: 3, 2: 3}


def test_k_regular_triangle(k3):
    assert enum_k_regular_subgraphs(k3, 2).members == {frozenset(), frozenset({0, 1, 2})}


def test_guards(k3):
    with pytest.raises(OracleRefusal) as info:
        enum_independent_sets(k3, OracleLimits(max_vertices=2))
    assert info.value.limit == "max_vertices"
    with pytest.raises(OracleRefusal):
        enum_k_colorable_subgraphs(complete_graph(5), 3, OracleLimits(max_assignments=10))


def test_empty_family_has_no_size():
    with pytest.raises(StructuralError):
        max_structure_size(enum_cagefree_subgraphs(Graph(2, ())))


def test_enumerate_family_dispatch(k3):
    kind = StructureKind(Structure.K_COLORABLE, k=2)
    assert enumerate_family(kind, k3).members == enum_k_colorable_subgraphs(k3, 2).members


def test_against_itertools_brute_force():
    rng = random.Random(3)
    for _ in range(15):
        g = random_graph(rng, rng.randint(1, 6))
        expected = set()
        for size in range(g.n + 1):
            for chosen in combinations(range(g.n), size):
                if not any(g.has_edge(a + 1, b + 1) for a, b in combinations(chosen, 2)):
                    expected.add(frozenset(chosen))
        assert enum_independent_sets(g).members == expected

        matchings = set()
        for size in range(g.edge_count + 1):
            for chosen in combinations(range(g.edge_count), size):
                ends = [v for j in chosen for v in g.edges[j]]
                if len(ends) == len(set(ends)):
                    matchings.add(frozenset(chosen))
        assert enum_matchings(g).members == matchings


def test_one_regular_subgraphs_are_matchings():
    for n in range(1, 6):
        for g in nonisomorphic_graphs(n):
            assert enum_k_regular_subgraphs(g, 1).members == enum_matchings(g).members


def test_vertex_covers_complement_independent_sets():
    for n in range(1, 6):
        for g in nonisomorphic_graphs(n):
            everything = frozenset(range(g.n))
            complements = {everything - member for member in enum_independent_sets(g).members}
            assert enum_vertex_covers(g).members == complements


def test_missing_parameters_rejected(k3):
    with pytest.raises(StructuralError):
        enum_k_colorable_subgraphs(k3, None)
    with pytest.raises(StructuralError):
        enum_k_regular_subgraphs(k3, None)
    with pytest.raises(StructuralError):
        enum_homomorphic_subgraphs(k3, None)
