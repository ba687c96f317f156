"""Inequality system, vertex oracle, and skeleton construction."""

from __future__ import annotations

from collections import Counter
from fractions import Fraction

import pytest

from matcharr import (
    DimensionTooLarge,
    Graph,
    Matching,
    RowKind,
    brute_force_vertices,
    build_matching_arrangement,
    build_skeleton,
    check_matchings_feasible,
    edmonds_inequalities,
    enumerate_matchings,
    enumerate_sequences,
    hyperplane_to_skeleton_edge,
    matching_to_vertex,
    sequence_to_hyperplane,
    skeleton_to_dot,
    skeleton_to_json_dict,
)

SINGLE = Graph(2, ((0, 1),))
TWO_DISJOINT = Graph(4, ((0, 1), (2, 3)))
P3 = Graph(3, ((0, 1), (1, 2)))
P4 = Graph(4, ((0, 1), (1, 2), (2, 3)))
K3 = Graph(3, ((0, 1), (0, 2), (1, 2)))
C4 = Graph(4, ((0, 1), (1, 2), (2, 3), (0, 3)))
SMALL = [SINGLE, TWO_DISJOINT, P3, P4, K3, C4]


def test_matching_to_vertex():
    assert matching_to_vertex(Matching.from_indices([0, 2]), 4) == (1, 0, 1, 0)
    assert matching_to_vertex(Matching.from_indices([]), 2) == (0, 0)


@pytest.mark.parametrize("g,counts", [
    (SINGLE, {RowKind.NON_NEG: 1, RowKind.DEGREE: 2}),
    (P3, {RowKind.NON_NEG: 2, RowKind.DEGREE: 3, RowKind.ODD_SET: 1}),
    (K3, {RowKind.NON_NEG: 3, RowKind.DEGREE: 3, RowKind.ODD_SET: 1}),
    (TWO_DISJOINT, {RowKind.NON_NEG: 2, RowKind.DEGREE: 4, RowKind.ODD_SET: 4}),
])
def test_edmonds_row_counts(g, counts):
    system = edmonds_inequalities(g)
    assert system.dimension == g.edge_count
    assert Counter(r.kind for r in system.rows) == counts


def test_edmonds_odd_set_row_shape():
    system = edmonds_inequalities(K3)
    odd = [r for r in system.rows if r.kind is RowKind.ODD_SET]
    assert len(odd) == 1
    assert odd[0].coeffs == (1, 1, 1)
    assert odd[0].rhs == 1


@pytest.mark.parametrize("g", SMALL)
def test_all_matchings_feasible(g):
    assert check_matchings_feasible(g)


@pytest.mark.parametrize("g", SMALL)
def test_brute_force_vertices_are_matching_indicators(g):
    vertices = brute_force_vertices(edmonds_inequalities(g))
    indicators = sorted(
        tuple(Fraction(x) for x in matching_to_vertex(m, g.edge_count))
        for m in enumerate_matchings(g))
    assert vertices == indicators


def test_brute_force_vertex_guard():
    k4 = Graph(4, ((0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)))
    with pytest.raises(DimensionTooLarge):
        brute_force_vertices(edmonds_inequalities(k4))


def test_skeleton_two_disjoint_is_square():
    sk = build_skeleton(TWO_DISJOINT)
    assert [m.mask for m in sk.vertices] == [0, 1, 2, 3]
    assert sk.edges == ((0, 1), (0, 2), (1, 3), (2, 3))


def test_skeleton_k3_is_complete():
    sk = build_skeleton(K3)
    assert len(sk.vertices) == 4
    assert set(sk.edges) == {(i, j) for i in range(4) for j in range(i + 1, 4)}


def test_skeleton_p4():
    sk = build_skeleton(P4)
    assert len(sk.vertices) == 5
    assert len(sk.edges) == 8
    # {e1} vs {e3} and {} vs {e1,e3} differ by two disjoint edges: no skeleton edge
    assert (1, 3) not in sk.edges
    assert (0, 4) not in sk.edges


def _edge_normal(g, sk, edge):
    va = matching_to_vertex(sk.vertices[edge[0]], g.edge_count)
    vb = matching_to_vertex(sk.vertices[edge[1]], g.edge_count)
    diff = [x - y for x, y in zip(vb, va)]
    lead = next(x for x in diff if x)
    return tuple(x * lead for x in diff)


@pytest.mark.parametrize("g", SMALL)
def test_skeleton_edge_normals_are_the_hyperplanes(g):
    # several parallel skeleton edges can share one hyperplane, but the sets
    # of directions must coincide
    sk = build_skeleton(g)
    a = build_matching_arrangement(g)
    directions = {_edge_normal(g, sk, e) for e in sk.edges}
    assert directions == {h.normal for h in a.hyperplanes}


@pytest.mark.parametrize("g", SMALL)
def test_hyperplane_skeleton_edge_correspondence(g):
    sk = build_skeleton(g)
    position = {m: i for i, m in enumerate(sk.vertices)}
    for seq in enumerate_sequences(g):
        ma, mb = hyperplane_to_skeleton_edge(seq)
        edge = tuple(sorted((position[ma], position[mb])))
        assert edge in sk.edges
        normal = sequence_to_hyperplane(seq, g.edge_count).normal
        assert _edge_normal(g, sk, edge) == normal


def test_hyperplane_to_skeleton_edge_examples():
    seqs = enumerate_sequences(C4)
    cycle = [s for s in seqs if len(s.edges) == 4][0]
    ma, mb = hyperplane_to_skeleton_edge(cycle)
    assert ma.edge_indices() == (0, 2)
    assert mb.edge_indices() == (1, 3)


@pytest.mark.parametrize("g", SMALL)
def test_skeleton_connected(g):
    sk = build_skeleton(g)
    adjacency = {i: [] for i in range(len(sk.vertices))}
    for i, j in sk.edges:
        adjacency[i].append(j)
        adjacency[j].append(i)
    seen = {0}
    stack = [0]
    while stack:
        for w in adjacency[stack.pop()]:
            if w not in seen:
                seen.add(w)
                stack.append(w)
    assert len(seen) == len(sk.vertices)


def test_skeleton_json_dict():
    assert skeleton_to_json_dict(build_skeleton(TWO_DISJOINT)) == {
        "vertex_count": 4,
        "edge_count": 4,
        "vertices": [[], [1], [2], [1, 2]],
        "edges": [[0, 1], [0, 2], [1, 3], [2, 3]],
    }


def test_skeleton_dot_output():
    text = skeleton_to_dot(build_skeleton(TWO_DISJOINT))
    assert text.startswith("graph skeleton {")
    assert 'm3 [label="{1,2}"];' in text
    assert "m0 -- m1;" in text
