"""Matching polytope: inequality description, vertex oracle, and skeleton.

The polytope of a graph with n edges lives in R^n and is cut out by
nonnegativity rows, one degree row per vertex, and one odd-set row per odd
vertex subset of size at least 3.  Its vertices are exactly the matching
indicator vectors, and two vertices are adjacent exactly when the symmetric
difference of their matchings is a simple path or an even simple cycle.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from itertools import combinations

from .errors import DimensionTooLarge
from .graphs import (EdgeSeq, EdgeSetKind, Graph, Matching, classify_edge_set,
                     enumerate_matchings)


class RowKind(Enum):
    NON_NEG = "non_neg"
    DEGREE = "degree"
    ODD_SET = "odd_set"


@dataclass(frozen=True)
class Row:
    coeffs: tuple[int, ...]
    rhs: int
    kind: RowKind


@dataclass(frozen=True)
class InequalitySystem:
    """Rows coeffs . x <= rhs describing the polytope."""

    dimension: int
    rows: tuple[Row, ...]


@dataclass(frozen=True)
class Skeleton:
    """Polytope graph: matchings as vertices, adjacency between list indices."""

    vertices: tuple[Matching, ...]
    edges: tuple[tuple[int, int], ...]


def matching_to_vertex(m: Matching, n: int) -> tuple[int, ...]:
    """0/1 indicator vector of the matching in R^n."""
    return tuple(1 if m.mask >> i & 1 else 0 for i in range(n))


def edmonds_inequalities(g: Graph) -> InequalitySystem:
    """The three row families; odd-set rows for every odd subset of size >= 3,
    including rows whose subset spans no edge (harmless 0 <= k)."""
    n = g.edge_count
    rows = []
    for i in range(n):
        coeffs = [0] * n
        coeffs[i] = -1
        rows.append(Row(tuple(coeffs), 0, RowKind.NON_NEG))
    for v in range(g.vertex_count):
        coeffs = tuple(1 if v in e else 0 for e in g.edges)
        rows.append(Row(coeffs, 1, RowKind.DEGREE))
    for size in range(3, g.vertex_count + 1, 2):
        for subset in combinations(range(g.vertex_count), size):
            inside = set(subset)
            coeffs = tuple(1 if u in inside and v in inside else 0
                           for u, v in g.edges)
            rows.append(Row(coeffs, (size - 1) // 2, RowKind.ODD_SET))
    return InequalitySystem(dimension=n, rows=tuple(rows))


def check_matchings_feasible(g: Graph) -> bool:
    """True iff every matching's indicator satisfies every inequality row."""
    system = edmonds_inequalities(g)
    for m in enumerate_matchings(g):
        x = matching_to_vertex(m, g.edge_count)
        for row in system.rows:
            if sum(c * v for c, v in zip(row.coeffs, x)) > row.rhs:
                return False
    return True


def _solve_square(rows: list[Row], n: int) -> tuple[Fraction, ...] | None:
    # exact Gaussian elimination; None when singular
    mat = [[Fraction(c) for c in row.coeffs] + [Fraction(row.rhs)] for row in rows]
    for col in range(n):
        pivot = next((r for r in range(col, n) if mat[r][col]), None)
        if pivot is None:
            return None
        mat[col], mat[pivot] = mat[pivot], mat[col]
        inv = 1 / mat[col][col]
        mat[col] = [a * inv for a in mat[col]]
        for r in range(n):
            if r != col and mat[r][col]:
                f = mat[r][col]
                mat[r] = [a - f * b for a, b in zip(mat[r], mat[col])]
    return tuple(mat[r][n] for r in range(n))


def brute_force_vertices(system: InequalitySystem) -> list[tuple[Fraction, ...]]:
    """All basic feasible solutions: solve every invertible n-row subsystem as
    equalities and keep the solutions satisfying the whole system.

    Desk-scale oracle; raises DimensionTooLarge beyond 5 variables.
    """
    n = system.dimension
    if n > 5:
        raise DimensionTooLarge(f"{n} variables exceeds the oracle guard of 5")
    found: set[tuple[Fraction, ...]] = set()
    for chosen in combinations(system.rows, n):
        x = _solve_square(list(chosen), n)
        if x is None:
            continue
        if all(sum(c * v for c, v in zip(row.coeffs, x)) <= row.rhs
               for row in system.rows):
            found.add(x)
    return sorted(found)


def build_skeleton(g: Graph) -> Skeleton:
    """Adjacency via classification of the symmetric difference of matchings."""
    matchings = enumerate_matchings(g)
    edges = []
    for i in range(len(matchings)):
        for j in range(i + 1, len(matchings)):
            diff = Matching(matchings[i].mask ^ matchings[j].mask)
            kind = classify_edge_set(g, diff.edge_indices())
            if kind is not EdgeSetKind.NEITHER:
                edges.append((i, j))
    return Skeleton(vertices=tuple(matchings), edges=tuple(edges))


def hyperplane_to_skeleton_edge(seq: EdgeSeq) -> tuple[Matching, Matching]:
    """Split a sequence into its two alternating halves.

    Odd-position edges (first, third, ...) form one matching, even-position
    edges the other; the difference of their indicator vectors is the
    sequence's hyperplane normal up to sign, and the two matchings are
    adjacent in the skeleton.
    """
    first = Matching.from_indices(seq.edges[0::2])
    second = Matching.from_indices(seq.edges[1::2])
    return first, second


def skeleton_to_json_dict(sk: Skeleton) -> dict:
    """JSON form: matchings as 1-based edge-index arrays, edges as index pairs
    into the vertex list (0-based list positions)."""
    return {
        "vertex_count": len(sk.vertices),
        "edge_count": len(sk.edges),
        "vertices": [[i + 1 for i in m.edge_indices()] for m in sk.vertices],
        "edges": [[i, j] for i, j in sk.edges],
    }


def _matching_label(m: Matching) -> str:
    inside = ",".join(str(i + 1) for i in m.edge_indices())
    return "{" + inside + "}"


def skeleton_to_dot(sk: Skeleton) -> str:
    lines = ["graph skeleton {"]
    for idx, m in enumerate(sk.vertices):
        lines.append(f'  m{idx} [label="{_matching_label(m)}"];')
    for i, j in sk.edges:
        lines.append(f"  m{i} -- m{j};")
    lines.append("}")
    return "\n".join(lines) + "\n"
