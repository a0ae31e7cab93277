from fractions import Fraction

import pytest

from encoders import (ORIGINAL, SUBSET, encode_edge_chromatic, encode_graph_homomorphism,
                      encode_independent_set, encode_k_colorable_subgraph, encode_k_regular_subgraph,
                      encode_perfect_matching_v1, encode_regular_spanning_subgraph, encode_vertex_cover)
from errors import ResourceRefusal, StructuralError
from graphs import complete_graph
from nulla import (CERTIFIED, NO_CERTIFICATE, Certificate, DegreeRecord, SolveReport, build_linear_system,
                   certificate_at_degree, change_of_variables, complement_substitution, default_degree_bound,
                   nulla_solve, verify_certificate)
from oracles import OracleLimits


def test_triangle_independent_set_degree_one(k3):
    system = encode_independent_set(k3, 2)
    result = nulla_solve(system, 3)
    assert result.found
    assert result.degree == 1
    assert result.report.final_status == CERTIFIED
    assert [r.degree for r in result.report.records] == [0, 1]
    assert verify_certificate(system, result.certificate)


def test_feasible_system_has_no_certificate(k2):
    system = encode_independent_set(k2, 1)
    result = nulla_solve(system, 3)
    assert not result.found
    assert result.report.final_status == NO_CERTIFICATE
    assert len(result.report.records) == 4


def test_matching_v1_small_graphs(p3, k3):
    assert nulla_solve(encode_perfect_matching_v1(p3), 2).degree == 0
    assert nulla_solve(encode_perfect_matching_v1(k3), 2).degree == 1


def test_minimality_recheck(k3):
    system = encode_independent_set(k3, 2)
    assert certificate_at_degree(system, 0) is None
    assert certificate_at_degree(system, 1) is not None


def test_column_cap_refusal_keeps_report(k3):
    system = encode_independent_set(k3, 2)
    with pytest.raises(ResourceRefusal) as info:
        nulla_solve(system, 3, max_columns=10)
    assert [r.degree for r in info.value.report.records] == [0]


def test_tampered_certificate_leaves_residual(k3):
    system = encode_independent_set(k3, 2)
    certificate = nulla_solve(system, 1).certificate
    betas = list(certificate.betas)
    betas[-1] = betas[-1] + 1
    check = verify_certificate(system, Certificate(tuple(betas)))
    assert not check.ok
    assert check.residual == system.polys[-1]


def test_length_mismatch(k3):
    system = encode_independent_set(k3, 2)
    with pytest.raises(StructuralError):
        verify_certificate(system, Certificate((system.table.const(1),)))


def test_certificate_json_round_trip(k3):
    system = encode_independent_set(k3, 2)
    result = nulla_solve(system, 1)
    text = result.certificate.to_json(system, result.report)
    again = Certificate.from_json(text, system.table)
    assert again.betas == result.certificate.betas
    assert system.system_hash() in text
    assert "millis" in text


def test_report_degrees_ascend():
    report = SolveReport()
    report.add(DegreeRecord(0, 1, 1, "infeasible"))
    with pytest.raises(StructuralError):
        report.add(DegreeRecord(2, 1, 1, "infeasible"))
    assert report.to_csv().splitlines()[0] == "degree,rows,cols,status,millis"


def test_complement_map_carries_cover_certificate(k3):
    subset = encode_vertex_cover(k3, 1, SUBSET)
    original = encode_vertex_cover(k3, 1, ORIGINAL)
    certificate = nulla_solve(subset, 2).certificate
    mapping = complement_substitution(subset.table, original.table)
    moved, system = change_of_variables(certificate, subset, mapping, target=original)
    assert system is original
    assert verify_certificate(original, moved)
    assert moved.degree == certificate.degree


def test_change_of_variables_without_target(k3):
    system = encode_independent_set(k3, 2)
    certificate = nulla_solve(system, 1).certificate
    table = system.table
    shift = {i: table.var(i) + Fraction(1, 3) for i in range(table.size)}
    moved, transformed = change_of_variables(certificate, system, shift)
    assert transformed.cardinality_index is None
    assert verify_certificate(transformed, moved)


def test_singular_map_rejected(k3):
    system = encode_independent_set(k3, 2)
    certificate = nulla_solve(system, 1).certificate
    table = system.table
    collapse = {i: table.var(0) for i in range(table.size)}
    with pytest.raises(StructuralError):
        change_of_variables(certificate, system, collapse)


def test_default_bound_is_independence_number(k3, c4):
    assert default_degree_bound(encode_independent_set(k3, 2)) == 1
    assert default_degree_bound(encode_independent_set(c4, 3)) == 2


def test_default_bound_covers_auxiliary_equations(k3, k2):
    # max structure 2 plus equation degree 3
    assert default_degree_bound(encode_graph_homomorphism(k3, k2, 3)) == 5
    assert default_degree_bound(encode_edge_chromatic(k3, 3)) == 5
    assert default_degree_bound(encode_k_colorable_subgraph(k3, 2, 3)) == 4


def test_default_bound_for_families_not_subset_closed(k3):
    assert default_degree_bound(encode_k_regular_subgraph(complete_graph(4), 2, 5)) == 6
    assert default_degree_bound(encode_regular_spanning_subgraph(k3, 2)) == 4


def test_default_bound_fallback(k3, k2):
    refuse = OracleLimits(max_edges=0)
    assert default_degree_bound(encode_independent_set(k3, 2), OracleLimits(max_vertices=0)) == 3
    assert default_degree_bound(encode_graph_homomorphism(k3, k2, 3), refuse) == 3 + 3


def test_rows_only_for_occurring_monomials(k3):
    matrix, columns = build_linear_system(encode_independent_set(k3, 2), 2)
    assert len(columns) == 7 * 10
    assert all(row or b for row, b in zip(matrix.rows, matrix.rhs))
