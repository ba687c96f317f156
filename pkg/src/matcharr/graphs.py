"""Graphs, matchings, and the alternating edge sequences that generate hyperplanes.

Edges are numbered by their position in the input list.  That numbering fixes
the coordinate order of every downstream object: hyperplane normals, polytope
variables, and witness points all live in R^n with one coordinate per edge.
Indices are 0-based internally; exports add 1 to match the input numbering.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Iterable

from .errors import GraphFormatError, SequenceCapExceeded

DEFAULT_SEQUENCE_CAP = 500_000


class EdgeSetKind(Enum):
    SIMPLE_PATH = "simple_path"
    EVEN_SIMPLE_CYCLE = "even_simple_cycle"
    NEITHER = "neither"


@dataclass(frozen=True)
class Graph:
    """Loop-free simple graph with numbered edges."""

    vertex_count: int
    edges: tuple[tuple[int, int], ...]

    def __post_init__(self):
        seen = set()
        for u, v in self.edges:
            if u == v:
                raise GraphFormatError(f"loop at vertex {u}")
            if not (0 <= u < self.vertex_count and 0 <= v < self.vertex_count):
                raise GraphFormatError(f"edge ({u}, {v}) out of vertex range")
            key = (u, v) if u < v else (v, u)
            if key in seen:
                raise GraphFormatError(f"parallel edge ({u}, {v})")
            seen.add(key)

    @property
    def edge_count(self) -> int:
        return len(self.edges)

    def incidence(self) -> list[list[tuple[int, int]]]:
        """Per vertex, the incident (edge index, other endpoint) pairs."""
        adj: list[list[tuple[int, int]]] = [[] for _ in range(self.vertex_count)]
        for i, (u, v) in enumerate(self.edges):
            adj[u].append((i, v))
            adj[v].append((i, u))
        return adj


@dataclass(frozen=True, order=True)
class Matching:
    """Set of pairwise non-incident edges, stored as an edge-index bitmask."""

    mask: int

    def edge_indices(self) -> tuple[int, ...]:
        out = []
        m = self.mask
        while m:
            low = m & -m
            out.append(low.bit_length() - 1)
            m ^= low
        return tuple(out)

    @staticmethod
    def from_indices(indices: Iterable[int]) -> "Matching":
        mask = 0
        for i in indices:
            mask |= 1 << i
        return Matching(mask)


@dataclass(frozen=True)
class EdgeSeq:
    """Ordered edge-index walk forming a simple path or an even simple cycle."""

    edges: tuple[int, ...]
    kind: EdgeSetKind


def parse_graph(text: str) -> Graph:
    """Parse edge-list text: one "u v" pair per line, edges numbered in file order.

    Vertex labels are arbitrary tokens and get dense integer ids in order of
    first appearance.  Blank lines and lines starting with '#' are skipped.
    """
    labels: dict[str, int] = {}
    edges: list[tuple[int, int]] = []
    seen: set[tuple[int, int]] = set()
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if len(parts) != 2:
            raise GraphFormatError(f"line {lineno}: expected two vertex labels, got {raw!r}")
        if parts[0] == parts[1]:
            raise GraphFormatError(f"line {lineno}: loop edge {parts[0]!r}")
        ids = []
        for token in parts:
            if token not in labels:
                labels[token] = len(labels)
            ids.append(labels[token])
        u, v = ids
        key = (u, v) if u < v else (v, u)
        if key in seen:
            raise GraphFormatError(f"line {lineno}: duplicate edge {parts[0]} {parts[1]}")
        seen.add(key)
        edges.append((u, v))
    if not edges:
        raise GraphFormatError("input contains no edges")
    return Graph(vertex_count=len(labels), edges=tuple(edges))


def enumerate_matchings(g: Graph) -> list[Matching]:
    """All matchings of g including the empty one, in ascending bitmask order."""
    vertex_masks = [(1 << u) | (1 << v) for u, v in g.edges]
    out = []
    for mask in range(1 << g.edge_count):
        used = 0
        m = mask
        while m:
            low = m & -m
            vm = vertex_masks[low.bit_length() - 1]
            if used & vm:
                break
            used |= vm
            m ^= low
        else:
            out.append(Matching(mask))
    return out


def _canonical_cycle(seq: list[int]) -> tuple[int, ...]:
    # minimal edge-index tuple over all rotations and reflections
    k = len(seq)
    best: tuple[int, ...] | None = None
    for r in range(k):
        rot = seq[r:] + seq[:r]
        for cand in (tuple(rot), tuple(reversed(rot))):
            if best is None or cand < best:
                best = cand
    assert best is not None
    return best


def enumerate_sequences(g: Graph, max_sequences: int = DEFAULT_SEQUENCE_CAP) -> list[EdgeSeq]:
    """One canonical representative per simple path and per even simple cycle.

    Walks extend depth-first and never revisit a vertex, which is exactly the
    simplicity condition; a walk whose next edge returns to the start vertex
    closes a cycle and is kept when its length is even.  Paths keep the
    lexicographically smaller of their two traversals, cycles the minimal
    sequence over all rotations and reflections.  Single edges are length-1
    paths.  Raises SequenceCapExceeded when the output would exceed the cap.
    """
    adj = g.incidence()
    paths: set[tuple[int, ...]] = set()
    cycles: set[tuple[int, ...]] = set()

    def record_path(seq: list[int]) -> None:
        fwd = tuple(seq)
        bwd = tuple(reversed(seq))
        paths.add(fwd if fwd <= bwd else bwd)
        if len(paths) + len(cycles) > max_sequences:
            raise SequenceCapExceeded(
                f"graph generates more than {max_sequences} sequences")

    def extend(start: int, here: int, visited: set[int], seq: list[int]) -> None:
        record_path(seq)
        for edge_index, nxt in adj[here]:
            if edge_index in seq:
                continue
            if nxt == start:
                length = len(seq) + 1
                if length >= 3 and length % 2 == 0:
                    cycles.add(_canonical_cycle(seq + [edge_index]))
                    if len(paths) + len(cycles) > max_sequences:
                        raise SequenceCapExceeded(
                            f"graph generates more than {max_sequences} sequences")
                continue
            if nxt in visited:
                continue
            extend(start, nxt, visited | {nxt}, seq + [edge_index])

    for i, (u, v) in enumerate(g.edges):
        extend(u, v, {u, v}, [i])
        extend(v, u, {u, v}, [i])

    out = [EdgeSeq(p, EdgeSetKind.SIMPLE_PATH) for p in paths]
    out += [EdgeSeq(c, EdgeSetKind.EVEN_SIMPLE_CYCLE) for c in cycles]
    out.sort(key=lambda s: (len(s.edges), s.edges))
    return out


def classify_edge_set(g: Graph, s: Iterable[int]) -> EdgeSetKind:
    """Classify an edge set as a simple path, an even simple cycle, or neither.

    A nonempty set is a simple path iff it is connected with exactly two
    degree-1 vertices and all other degrees 2; an even simple cycle iff it is
    connected, every degree is 2, and the edge count is even.
    """
    indices = sorted(set(s))
    if not indices:
        raise ValueError("empty edge set")
    degree: dict[int, int] = {}
    neighbors: dict[int, list[int]] = {}
    for i in indices:
        u, v = g.edges[i]
        degree[u] = degree.get(u, 0) + 1
        degree[v] = degree.get(v, 0) + 1
        neighbors.setdefault(u, []).append(v)
        neighbors.setdefault(v, []).append(u)
    if any(d > 2 for d in degree.values()):
        return EdgeSetKind.NEITHER
    # connectivity over the touched vertices
    verts = list(degree)
    stack = [verts[0]]
    reached = {verts[0]}
    while stack:
        for w in neighbors[stack.pop()]:
            if w not in reached:
                reached.add(w)
                stack.append(w)
    if len(reached) != len(verts):
        return EdgeSetKind.NEITHER
    ones = sum(1 for d in degree.values() if d == 1)
    if ones == 2:
        return EdgeSetKind.SIMPLE_PATH
    if ones == 0:
        return (EdgeSetKind.EVEN_SIMPLE_CYCLE if len(indices) % 2 == 0
                else EdgeSetKind.NEITHER)
    return EdgeSetKind.NEITHER
