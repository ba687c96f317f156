"""Release gate: one test per acceptance criterion.

Each test prints a single summary line on success; timing limits are part of
the assertions.  The corpus is every connected graph with at most six edges,
one per isomorphism class (52 graphs).
"""

from __future__ import annotations

import random
import time
from fractions import Fraction

from matcharr import (
    Graph,
    OnHyperplane,
    TieOnEdge,
    build_matching_arrangement,
    build_skeleton,
    brute_force_vertices,
    characteristic_polynomial,
    edmonds_inequalities,
    enumerate_lp_orientations,
    enumerate_matchings,
    enumerate_region_arrays,
    enumerate_regions,
    interpolation_primes,
    matching_to_vertex,
    orient_by_functional,
    region_count,
    region_of_point,
    verify_bijection,
)
from matcharr.fieldcount import count_avoiding, primes_greater_than


def test_criterion_1_single_edge():
    t0 = time.perf_counter()
    g = Graph(2, ((0, 1),))
    a = build_matching_arrangement(g)
    p = characteristic_polynomial(a)
    regions = enumerate_regions(a)
    orientations = enumerate_lp_orientations(g)
    report = verify_bijection(g)
    elapsed = time.perf_counter() - t0
    assert len(a.hyperplanes) == 1
    assert p.coefficients == (-1, 1)
    assert len(regions) == 2
    assert len(orientations) == 2
    assert report.verdict
    assert elapsed < 1.0
    print(f"criterion 1: PASS (single edge: 1 hyperplane, chi = t - 1, "
          f"2 regions, 2 orientations, verdict true, {elapsed:.2f}s)")


def test_criterion_2_two_disjoint_edges():
    g = Graph(4, ((0, 1), (2, 3)))
    a = build_matching_arrangement(g)
    assert len(a.hyperplanes) == 2
    p = characteristic_polynomial(a)
    assert p.coefficients == (1, -2, 1)
    assert len(enumerate_regions(a)) == 4
    sk = build_skeleton(g)
    assert [m.mask for m in sk.vertices] == [0b00, 0b01, 0b10, 0b11]
    # square: {} and {1,2} stay non-adjacent, as do {1} and {2}
    assert set(sk.edges) == {(0, 1), (0, 2), (1, 3), (2, 3)}
    assert len(enumerate_lp_orientations(g)) == 4
    print("criterion 2: PASS (two disjoint edges: 2 hyperplanes, "
          "chi = (t - 1)^2, 4 regions, square skeleton, 4 orientations)")


def test_criterion_3_p3_and_k3():
    t0 = time.perf_counter()
    p3 = Graph(3, ((0, 1), (1, 2)))
    a3 = build_matching_arrangement(p3)
    assert len(a3.hyperplanes) == 3
    assert len(enumerate_regions(a3)) == 6
    sk3 = build_skeleton(p3)
    assert len(sk3.vertices) == 3
    assert set(sk3.edges) == {(0, 1), (0, 2), (1, 2)}
    assert len(enumerate_lp_orientations(p3)) == 6
    t_p3 = time.perf_counter() - t0

    t0 = time.perf_counter()
    k3 = Graph(3, ((0, 1), (0, 2), (1, 2)))
    ak = build_matching_arrangement(k3)
    assert len(ak.hyperplanes) == 6
    pk = characteristic_polynomial(ak)
    assert pk.coefficients == (-6, 11, -6, 1)
    assert len(enumerate_regions(ak)) == 24
    skk = build_skeleton(k3)
    assert len(skk.vertices) == 4
    assert len(skk.edges) == 6
    assert len(enumerate_lp_orientations(k3)) == 24
    t_k3 = time.perf_counter() - t0
    assert t_p3 < 5.0
    assert t_k3 < 5.0
    print(f"criterion 3: PASS (P3: 3 hyperplanes, 6 regions, triangle "
          f"skeleton, 6 orientations, {t_p3:.2f}s; K3: 6 hyperplanes, "
          f"chi = (t-1)(t-2)(t-3), 24 regions, complete 4-vertex skeleton, "
          f"24 orientations, {t_k3:.2f}s)")


def test_criterion_4_bijection_at_scale(all_graphs):
    t0 = time.perf_counter()
    regions_total = 0
    for name, g in all_graphs:
        p = characteristic_polynomial(build_matching_arrangement(g))
        zaslavsky = region_count(p)
        report = verify_bijection(g, samples_per_region=5, rng_seed=0)
        assert report.verdict, name
        assert report.orientation_count == report.region_count == zaslavsky, name
        regions_total += report.region_count
    elapsed = time.perf_counter() - t0
    assert elapsed < 600.0
    print(f"criterion 4: PASS ({len(all_graphs)} graphs, "
          f"{regions_total} regions total, orientation count = region count "
          f"= (-1)^n chi(-1) and verdict true on each, {elapsed:.1f}s)")


def test_criterion_5_polytope_vertex_oracle(all_graphs):
    t0 = time.perf_counter()
    checked = 0
    for name, g in all_graphs:
        if g.edge_count > 4:
            continue
        vertices = brute_force_vertices(edmonds_inequalities(g))
        indicators = sorted(
            tuple(Fraction(x) for x in matching_to_vertex(m, g.edge_count))
            for m in enumerate_matchings(g)
        )
        assert vertices == indicators, name
        checked += 1
    elapsed = time.perf_counter() - t0
    assert checked == 10
    assert elapsed < 60.0
    print(f"criterion 5: PASS ({checked} graphs with <= 4 edges, enumerated "
          f"polytope vertices = matching indicators, {elapsed:.1f}s)")


def _point_on_hyperplane(rng: random.Random, normals, n: int):
    # (h.h) v - (h.v) h is orthogonal to h, hence exactly on its hyperplane
    while True:
        h = rng.choice(normals)
        v = [rng.randint(-9, 9) for _ in range(n)]
        hh = sum(x * x for x in h)
        hv = sum(x * y for x, y in zip(h, v))
        c = tuple(hh * x - hv * y for x, y in zip(v, h))
        if any(c):
            return c


def test_criterion_6_ties_iff_on_hyperplane(all_graphs, bundle):
    per_graph = 100
    for gi, (name, g) in enumerate(all_graphs):
        b = bundle(g)
        a = b.arrangement
        n = a.dimension
        normals = [h.normal for h in a.hyperplanes]
        witness_of = {
            tuple(int(s) for s in srow): tuple(int(w) for w in wrow)
            for srow, wrow in zip(b.signs, b.witnesses)
        }
        rng = random.Random(1000 + gi)
        for k in range(per_graph):
            if k % 12 == 11 and n > 1:
                # in dimension 1 no nonzero functional lies on a hyperplane
                c = _point_on_hyperplane(rng, normals, n)
            else:
                c = tuple(Fraction(rng.randint(-240, 240), rng.randint(1, 36))
                          for _ in range(n))
                if not any(c):
                    continue
            on_plane = False
            tied = False
            signs = None
            functional_orientation = None
            try:
                signs = region_of_point(a, c)
            except OnHyperplane:
                on_plane = True
            try:
                functional_orientation = orient_by_functional(b.skeleton, c)
            except TieOnEdge:
                tied = True
            assert tied == on_plane, (name, c)
            if not on_plane:
                witness = witness_of[signs]
                assert functional_orientation == orient_by_functional(
                    b.skeleton, witness), (name, c)
    print(f"criterion 6: PASS ({len(all_graphs)} graphs x {per_graph} "
          f"functionals, tie raised exactly when the point lies on a "
          f"hyperplane, otherwise orientation equals the region witness's)")


def test_criterion_7_invariance_and_antipodes(all_graphs, bundle, charpoly_cache):
    renumberings = 5
    for gi, (name, g) in enumerate(all_graphs):
        base = charpoly_cache(g)
        b = bundle(g)
        rng = random.Random(7000 + gi)
        for _ in range(renumberings):
            perm = list(range(g.edge_count))
            rng.shuffle(perm)
            h = Graph(g.vertex_count, tuple(g.edges[i] for i in perm))
            ah = build_matching_arrangement(h)
            assert len(ah.hyperplanes) == len(b.arrangement.hyperplanes), name
            ph = characteristic_polynomial(ah)
            assert ph.coefficients == base.coefficients, name
            assert region_count(ph) == region_count(base), name
            if h.edge_count <= 5:
                # direct recount for the smaller graphs; polynomial equality
                # already pins the count for the 6-edge ones
                sh, _ = enumerate_region_arrays(ah)
                assert len(sh) == len(b.signs), name
        sign_rows = {row.tobytes() for row in b.signs}
        assert all((-row).tobytes() in sign_rows for row in b.signs), name
        for i in rng.sample(range(len(b.witnesses)),
                            k=min(12, len(b.witnesses))):
            w = tuple(int(x) for x in b.witnesses[i])
            o = orient_by_functional(b.skeleton, w)
            reversed_o = orient_by_functional(b.skeleton,
                                              tuple(-x for x in w))
            assert reversed_o.directions == tuple(-d for d in o.directions), name
    print(f"criterion 7: PASS ({len(all_graphs)} graphs x {renumberings} "
          f"edge renumberings keep the polynomial and region count; every "
          f"region has its antipode and sampled antipodal witnesses reverse "
          f"the orientation)")


def test_criterion_8_charpoly_integrity(all_graphs, bundle, charpoly_cache):
    for name, g in all_graphs:
        b = bundle(g)
        p = charpoly_cache(g)
        n = b.arrangement.dimension
        assert p.degree == n, name
        assert p.coefficients[-1] == 1, name
        assert all(isinstance(c, int) for c in p.coefficients), name
        q = primes_greater_than(max(interpolation_primes(b.arrangement)), 1)[0]
        normals = [h.normal for h in b.arrangement.hyperplanes]
        assert p.evaluate(q) == count_avoiding(normals, n, q), name
    print(f"criterion 8: PASS ({len(all_graphs)} graphs, polynomial monic "
          f"integer of degree n and matching a direct count at a held-out "
          f"prime)")
