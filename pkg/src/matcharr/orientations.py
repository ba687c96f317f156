"""Skeleton orientations induced by linear functionals, and the region map.

A functional c orients every skeleton edge toward the endpoint whose matching
has the larger value of c.  The difference of the two indicator vectors of an
edge's matchings is an arrangement normal up to sign, so c ties on some edge
exactly when c lies on a hyperplane, and the orientation is constant on each
region.  verify_bijection checks the region -> orientation map empirically:
injectivity over witnesses, well-definedness over random in-region samples,
and tie-freeness; it reports rather than raises.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .arrangement import build_matching_arrangement, enumerate_region_arrays
from .chambers import _imatmul, _signs
from .errors import TieOnEdge
from .graphs import DEFAULT_SEQUENCE_CAP, Graph
from .polytope import Skeleton, build_skeleton, matching_to_vertex

FORWARD = 1
BACKWARD = -1


@dataclass(frozen=True)
class Orientation:
    """One direction per skeleton edge, aligned with Skeleton.edges.

    FORWARD (+1) on edge (i, j) means i -> j, i.e. vertex j has the larger
    functional value; BACKWARD (-1) means j -> i.
    """

    directions: tuple[int, ...]

    def fingerprint(self) -> str:
        bits = np.array(self.directions, dtype=np.int8) > 0
        return np.packbits(bits).tobytes().hex()


@dataclass(frozen=True)
class OrientationProperties:
    acyclic: bool
    unique_source: bool
    unique_sink: bool
    source: int | None
    sink: int | None


@dataclass(frozen=True)
class BijectionReport:
    """Outcome of verify_bijection.

    verdict is true iff the witness orientations are pairwise distinct
    (injective), every one is tie-free (total), and every accepted in-region
    sample reproduced its region's orientation (well_defined).  Sampling
    shortfalls are reported as (region index, samples obtained) pairs and do
    not affect the verdict on their own.
    """

    region_count: int
    orientation_count: int
    fingerprints: tuple[str, ...]
    verdict: bool
    injective: bool
    total: bool
    well_defined: bool
    samples_per_region: int
    seed: int
    sampling_shortfalls: tuple[tuple[int, int], ...]
    mismatched_regions: tuple[int, ...]


def _edge_difference_matrix(sk: Skeleton, n: int) -> np.ndarray:
    # row per skeleton edge (i, j): indicator(v_j) - indicator(v_i)
    rows = np.zeros((len(sk.edges), n), dtype=np.int64)
    for t, (i, j) in enumerate(sk.edges):
        vi = matching_to_vertex(sk.vertices[i], n)
        vj = matching_to_vertex(sk.vertices[j], n)
        rows[t] = np.array(vj, dtype=np.int64) - np.array(vi, dtype=np.int64)
    return rows


def orient_by_functional(sk: Skeleton, c) -> Orientation:
    """Orient every skeleton edge toward the larger value of the functional.

    c is a rational vector over edge coordinates; the value of a matching is
    the sum of its coordinates.  Raises TieOnEdge when two adjacent matchings
    take equal values (ties on non-adjacent matchings are allowed).
    """
    values = [sum(c[i] for i in m.edge_indices()) for m in sk.vertices]
    directions = []
    for i, j in sk.edges:
        if values[i] == values[j]:
            raise TieOnEdge((i, j))
        directions.append(FORWARD if values[j] > values[i] else BACKWARD)
    return Orientation(tuple(directions))


def _orientation_matrix(witnesses: np.ndarray, diff: np.ndarray) -> np.ndarray:
    return _signs(_imatmul(witnesses, diff.T))


def _row_fingerprint(row: np.ndarray) -> str:
    return np.packbits(row > 0).tobytes().hex()


def enumerate_lp_orientations(g: Graph,
                              max_sequences: int = DEFAULT_SEQUENCE_CAP) -> list[Orientation]:
    """Orientations induced by every region witness, deduplicated.

    The bijection makes duplicates impossible, so the result has one
    orientation per region.  A tie at a witness would mean the witness lies on
    a hyperplane, which the region construction excludes; it raises TieOnEdge
    as an internal-consistency failure.
    """
    a = build_matching_arrangement(g, max_sequences=max_sequences)
    _, witnesses = enumerate_region_arrays(a)
    sk = build_skeleton(g)
    diff = _edge_difference_matrix(sk, g.edge_count)
    matrix = _orientation_matrix(witnesses, diff)
    zero = np.argwhere(matrix == 0)
    if len(zero):
        raise TieOnEdge(sk.edges[int(zero[0][1])])
    out = []
    seen = set()
    for row in matrix:
        key = row.tobytes()
        if key not in seen:
            seen.add(key)
            out.append(Orientation(tuple(int(x) for x in row)))
    return out


def verify_bijection(g: Graph, samples_per_region: int = 5, rng_seed: int = 0,
                     max_retries: int = 1000,
                     max_sequences: int = DEFAULT_SEQUENCE_CAP) -> BijectionReport:
    """Empirically verify that regions biject onto skeleton orientations.

    For every region: orient from its witness (totality), check all witness
    orientations distinct (injectivity), then draw samples_per_region random
    integer points, keep those whose sign vector matches the region (bounded
    by max_retries attempts per sample), and require each to reproduce the
    witness orientation (well-definedness).  Sampling is reproducible per
    (rng_seed, region index) and independent of iteration order.
    """
    if samples_per_region < 1:
        raise ValueError("samples_per_region must be at least 1")
    a = build_matching_arrangement(g, max_sequences=max_sequences)
    signs, witnesses = enumerate_region_arrays(a)
    sk = build_skeleton(g)
    diff = _edge_difference_matrix(sk, g.edge_count)
    matrix = _orientation_matrix(witnesses, diff)

    total = not (matrix == 0).any()
    fingerprints = tuple(_row_fingerprint(row) for row in matrix)
    injective = len(set(fingerprints)) == len(fingerprints)

    normals = np.array([h.normal for h in a.hyperplanes], dtype=np.int64)
    witnesses64 = np.asarray(witnesses).astype(np.int64, copy=False)
    signs64 = signs.astype(np.int64)
    # margin of each witness against each hyperplane, always >= 1
    margins = signs64 * _imatmul(witnesses64, normals.T)
    weight = np.abs(normals).sum(axis=1)

    spread = 64  # perturbation radius per coordinate
    shortfalls = []
    mismatched = []
    region_count = len(signs)
    for r in range(region_count):
        rng = np.random.default_rng([rng_seed, r])
        # scale the witness until the spread box cannot cross any hyperplane,
        # so rejection sampling accepts immediately while staying exact
        scale = 1 + spread * int(((weight + margins[r] - 1) // margins[r]).max())
        base = scale * witnesses64[r]
        obtained = 0
        attempts = 0
        bad = False
        while obtained < samples_per_region and attempts < samples_per_region * max_retries:
            want = samples_per_region - obtained
            draws = base + rng.integers(-spread, spread + 1,
                                        size=(want, g.edge_count))
            attempts += want
            point_signs = _signs(draws @ normals.T)
            accepted = draws[(point_signs == signs[r]).all(axis=1)]
            if len(accepted) == 0:
                continue
            obtained += len(accepted)
            sample_orients = _signs(accepted @ diff.T)
            if (sample_orients != matrix[r]).any():
                bad = True
        if bad:
            mismatched.append(r)
        if obtained < samples_per_region:
            shortfalls.append((r, obtained))

    well_defined = not mismatched
    verdict = bool(injective and total and well_defined)
    return BijectionReport(
        region_count=region_count,
        orientation_count=len(set(fingerprints)),
        fingerprints=fingerprints,
        verdict=verdict,
        injective=bool(injective),
        total=bool(total),
        well_defined=bool(well_defined),
        samples_per_region=samples_per_region,
        seed=rng_seed,
        sampling_shortfalls=tuple(shortfalls),
        mismatched_regions=tuple(mismatched),
    )


def orientation_properties(o: Orientation, sk: Skeleton) -> OrientationProperties:
    """Acyclicity plus uniqueness of global source and sink."""
    count = len(sk.vertices)
    succ: list[list[int]] = [[] for _ in range(count)]
    indegree = [0] * count
    outdegree = [0] * count
    for direction, (i, j) in zip(o.directions, sk.edges):
        tail, head = (i, j) if direction == FORWARD else (j, i)
        succ[tail].append(head)
        indegree[head] += 1
        outdegree[tail] += 1

    order = [v for v in range(count) if indegree[v] == 0]
    remaining = indegree[:]
    seen = 0
    queue = list(order)
    while queue:
        v = queue.pop()
        seen += 1
        for w in succ[v]:
            remaining[w] -= 1
            if remaining[w] == 0:
                queue.append(w)
    acyclic = seen == count

    sources = [v for v in range(count) if indegree[v] == 0]
    sinks = [v for v in range(count) if outdegree[v] == 0]
    return OrientationProperties(
        acyclic=acyclic,
        unique_source=len(sources) == 1,
        unique_sink=len(sinks) == 1,
        source=sources[0] if len(sources) == 1 else None,
        sink=sinks[0] if len(sinks) == 1 else None,
    )


def orientation_to_dot(sk: Skeleton, o: Orientation) -> str:
    from .polytope import _matching_label

    lines = ["digraph orientation {"]
    for idx, m in enumerate(sk.vertices):
        lines.append(f'  m{idx} [label="{_matching_label(m)}"];')
    for direction, (i, j) in zip(o.directions, sk.edges):
        tail, head = (i, j) if direction == FORWARD else (j, i)
        lines.append(f"  m{tail} -> m{head};")
    lines.append("}")
    return "\n".join(lines) + "\n"
