"""Coincidence graphs: enumeration, rejection rules, determinants."""

from fractions import Fraction

import pytest

from hompoly.coincidence import (
    Certificate,
    CoincidenceGraph,
    build_generic_matrix,
    canonical_encoding,
    certify_nonvanishing,
    enumerate_graphs,
    evaluate_matrix,
    path_multiset,
    poly_eval,
    reject_reason,
    symbolic_determinant,
)
from hompoly.linalg import mat_det

# independent oracle: multisets of typed paths summing to seven edges;
# odd lengths have one type, even lengths two (endpoints on either side)
EXPECTED_ENCODINGS = {
    "7",
    "6A+1",
    "6B+1",
    "5+2A",
    "5+2B",
    "5+1+1",
    "4A+3",
    "4B+3",
    "4A+2A+1",
    "4A+2B+1",
    "4B+2A+1",
    "4B+2B+1",
    "4A+1+1+1",
    "4B+1+1+1",
    "3+3+1",
    "3+2A+2A",
    "3+2A+2B",
    "3+2B+2B",
    "3+2A+1+1",
    "3+2B+1+1",
    "3+1+1+1+1",
    "2A+2A+2A+1",
    "2A+2A+2B+1",
    "2A+2B+2B+1",
    "2B+2B+2B+1",
    "2A+2A+1+1+1",
    "2A+2B+1+1+1",
    "2B+2B+1+1+1",
    "2A+1+1+1+1+1",
    "2B+1+1+1+1+1",
    "1+1+1+1+1+1+1",
}

SEVEN_DISJOINT = CoincidenceGraph(
    tuple((k, k) for k in range(7))
)


def graph(*edges):
    return CoincidenceGraph(tuple(edges))


# -- enumeration --------------------------------------------------------


def test_enumeration_finds_31_graphs():
    graphs = enumerate_graphs()
    assert len(graphs) == 31
    encodings = {canonical_encoding(g) for g in graphs}
    assert encodings == EXPECTED_ENCODINGS


def test_enumerated_graphs_are_all_accepted():
    for g in enumerate_graphs():
        assert reject_reason(g) == "accepted"


def test_disjoint_edges_graph_is_included():
    encodings = [canonical_encoding(g) for g in enumerate_graphs()]
    assert "1+1+1+1+1+1+1" in encodings


def test_shared_vertex_and_shared_facet_graph_is_included():
    # two edges meeting in a B-node, two meeting in an A-node, three free
    g = graph((0, 0), (1, 0), (2, 1), (2, 2), (3, 3), (4, 4), (5, 5))
    assert reject_reason(g) == "accepted"
    assert canonical_encoding(g) == "2A+2B+1+1+1"
    assert canonical_encoding(g) in {
        canonical_encoding(other) for other in enumerate_graphs()
    }


def test_graph_validation():
    with pytest.raises(ValueError):
        CoincidenceGraph(((0, 0), (1, 1)))
    with pytest.raises(ValueError):
        CoincidenceGraph(tuple((0, 0) for _ in range(7)))


# -- rejection rules ----------------------------------------------------


def test_a_node_of_degree_three_hits_rule_1():
    g = graph((0, 0), (0, 1), (0, 2), (1, 3), (2, 4), (3, 5), (4, 6))
    assert reject_reason(g) == "rejected(rule 1)"


def test_b_node_of_degree_three_hits_rule_2():
    g = graph((0, 0), (1, 0), (2, 0), (3, 1), (4, 2), (5, 3), (6, 4))
    assert reject_reason(g) == "rejected(rule 2)"


def test_four_cycle_hits_rule_3():
    g = graph((0, 0), (0, 1), (1, 0), (1, 1), (2, 2), (3, 3), (4, 4))
    assert reject_reason(g) == "rejected(rule 3)"


def test_six_cycle_hits_rule_4():
    g = graph((0, 0), (1, 0), (1, 1), (2, 1), (2, 2), (0, 2), (3, 3))
    assert reject_reason(g) == "rejected(rule 4)"


def test_rules_apply_in_order():
    # degree violation and a 4-cycle at once: the degree rule wins
    g = graph((0, 0), (0, 1), (0, 2), (1, 0), (1, 1), (2, 3), (3, 4))
    assert reject_reason(g) == "rejected(rule 1)"


def test_disjoint_edges_accepted():
    assert reject_reason(SEVEN_DISJOINT) == "accepted"


def test_path_multiset_rejects_cycles():
    g = graph((0, 0), (0, 1), (1, 0), (1, 1), (2, 2), (3, 3), (4, 4))
    with pytest.raises(ValueError):
        path_multiset(g)


# -- generic matrix -----------------------------------------------------


def test_disjoint_edges_matrix_has_28_variables():
    matrix = build_generic_matrix(SEVEN_DISJOINT)
    assert len(matrix.variables) == 28


def test_shared_a_node_drops_two_variables():
    g = graph((0, 0), (0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 6))
    matrix = build_generic_matrix(g)
    assert len(matrix.variables) == 26


def test_matrix_rows_follow_edge_coincidences():
    g = graph((0, 0), (1, 0), (2, 1), (2, 2), (3, 3), (4, 4), (5, 5))
    matrix = build_generic_matrix(g)

    def row_vars(row, prefixes):
        ids = set()
        for col in range(7):
            for mono, _ in matrix.entries[row][col]:
                for var in mono:
                    if matrix.variables[var][0] in prefixes:
                        ids.add(var)
        return ids

    for k in range(7):
        for l in range(k + 1, 7):
            share_b = g.edges[k][1] == g.edges[l][1]
            share_a = g.edges[k][0] == g.edges[l][0]
            assert (row_vars(k, "st") & row_vars(l, "st") != set()) == share_b
            assert (row_vars(k, "uv") & row_vars(l, "uv") != set()) == share_a


def test_matrix_constant_column():
    matrix = build_generic_matrix(SEVEN_DISJOINT)
    for row in range(7):
        assert matrix.entry(row, 6) == {(): -1}


def test_matrix_requires_accepted_graph():
    g = graph((0, 0), (0, 1), (0, 2), (1, 3), (2, 4), (3, 5), (4, 6))
    with pytest.raises(ValueError):
        build_generic_matrix(g)


# -- certification ------------------------------------------------------


def test_disjoint_edges_certified_on_first_attempt():
    certificate = certify_nonvanishing(SEVEN_DISJOINT)
    assert certificate.attempts == 0
    assert certificate.det_value != 0


def test_degenerate_assignment_vanishes_but_certification_recovers():
    # assigning every variable the same value makes all seven rows equal,
    # so the determinant is zero there; the prime assignment avoids this
    matrix = build_generic_matrix(SEVEN_DISJOINT)
    flat = tuple(Fraction(2) for _ in matrix.variables)
    assert mat_det(evaluate_matrix(matrix, flat)) == 0
    assert certify_nonvanishing(SEVEN_DISJOINT).det_value != 0


def test_all_31_graphs_certify_and_cross_check():
    for g in enumerate_graphs():
        certificate = certify_nonvanishing(g)
        assert isinstance(certificate, Certificate)
        assert certificate.det_value != 0
        matrix = build_generic_matrix(g)
        det_poly = symbolic_determinant(matrix)
        assert det_poly, "determinant must not be the zero polynomial"
        symbolic_value = poly_eval(det_poly, certificate.point)
        assert symbolic_value == certificate.det_value
        numeric = mat_det(evaluate_matrix(matrix, certificate.point))
        assert numeric == certificate.det_value
