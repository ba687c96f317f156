"""Alternating-sign hyperplane arrangements of a graph and their invariants.

Every simple path and every even simple cycle of the graph contributes the
central hyperplane x_a - x_b + x_c - ... = 0 over its edge coordinates in
traversal order.  This module builds that arrangement, enumerates its regions
with exact integer witnesses, and computes the characteristic polynomial by
prime-field counting, whose evaluation at -1 recounts the regions.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from . import chambers, fieldcount
from .errors import InterpolationInconsistent, OnHyperplane
from .graphs import DEFAULT_SEQUENCE_CAP, EdgeSeq, Graph, enumerate_sequences


@dataclass(frozen=True)
class Hyperplane:
    """Central hyperplane normal . x = 0 with entries in {-1, 0, +1}."""

    normal: tuple[int, ...]

    def support(self) -> tuple[int, ...]:
        return tuple(i for i, x in enumerate(self.normal) if x)


@dataclass(frozen=True)
class Arrangement:
    dimension: int
    hyperplanes: tuple[Hyperplane, ...]


@dataclass(frozen=True)
class Region:
    """Open chamber: its sign vector over the arrangement and an interior point."""

    signs: tuple[int, ...]
    witness: tuple[int, ...]


@dataclass(frozen=True)
class CharPoly:
    """Integer polynomial with coefficients stored constant term first."""

    coefficients: tuple[int, ...]

    @property
    def degree(self) -> int:
        return len(self.coefficients) - 1

    def evaluate(self, x):
        value = 0
        power = 1
        for c in self.coefficients:
            value += c * power
            power *= x
        return value


def sequence_to_hyperplane(seq: EdgeSeq, dimension: int) -> Hyperplane:
    """Alternating normal of an edge sequence: +1, -1, +1, ... over its edges,
    sign-normalized so the first nonzero coordinate is +1."""
    coeffs = [0] * dimension
    for position, edge in enumerate(seq.edges):
        coeffs[edge] = 1 if position % 2 == 0 else -1
    for c in coeffs:
        if c:
            if c < 0:
                coeffs = [-x for x in coeffs]
            break
    return Hyperplane(tuple(coeffs))


def build_matching_arrangement(g: Graph,
                               max_sequences: int = DEFAULT_SEQUENCE_CAP) -> Arrangement:
    """All distinct hyperplanes generated by the graph's paths and even cycles.

    Hyperplanes are sorted by (support size, support, normal), which lists
    coordinate hyperplanes first, e.g. x1, x2, x3, x1-x2, x1-x3, x2-x3 for the
    triangle.
    """
    if g.edge_count == 0:
        raise ValueError("graph has no edges")
    n = g.edge_count
    normals = {sequence_to_hyperplane(seq, n).normal
               for seq in enumerate_sequences(g, max_sequences=max_sequences)}
    ordered = sorted(normals, key=lambda v: (sum(1 for x in v if x),
                                             tuple(i for i, x in enumerate(v) if x),
                                             v))
    return Arrangement(dimension=n,
                       hyperplanes=tuple(Hyperplane(v) for v in ordered))


def enumerate_region_arrays(a: Arrangement) -> tuple[np.ndarray, np.ndarray]:
    """Bulk form of enumerate_regions: (signs, witnesses) matrices.

    signs is int8 with one row per region, columns in hyperplane order, rows
    sorted lexicographically (-1 before +1); witnesses is the aligned integer
    matrix, each row an interior point of its region.
    """
    if not a.hyperplanes:
        raise ValueError("empty arrangement")
    return chambers.enumerate_chambers([h.normal for h in a.hyperplanes],
                                       a.dimension)


def enumerate_regions(a: Arrangement) -> list[Region]:
    """All regions of the arrangement in canonical sign-vector order."""
    signs, witnesses = enumerate_region_arrays(a)
    return [Region(signs=tuple(int(s) for s in srow),
                   witness=tuple(int(w) for w in wrow))
            for srow, wrow in zip(signs, witnesses)]


def region_of_point(a: Arrangement, p) -> tuple[int, ...]:
    """Sign vector of a rational point; raises OnHyperplane on a zero dot."""
    point = [Fraction(x) if not isinstance(x, int) else x for x in p]
    if len(point) != a.dimension:
        raise ValueError(f"point has dimension {len(point)}, expected {a.dimension}")
    out = []
    for index, h in enumerate(a.hyperplanes):
        dot = sum(c * x for c, x in zip(h.normal, point) if c)
        if dot == 0:
            raise OnHyperplane(index)
        out.append(1 if dot > 0 else -1)
    return tuple(out)


def interpolation_primes(a: Arrangement) -> list[int]:
    """The primes characteristic_polynomial counts at: dimension+1 for the
    interpolation plus one control prime, all above max(dimension, #planes)."""
    lower = max(a.dimension, len(a.hyperplanes))
    return fieldcount.primes_greater_than(lower, a.dimension + 2)


def characteristic_polynomial(a: Arrangement) -> CharPoly:
    """Characteristic polynomial via prime-field counting and interpolation.

    Counts the complement of the arrangement over dimension+1 primes,
    interpolates exactly, and checks one further control prime; any
    disagreement (or a non-integer, non-monic result) raises
    InterpolationInconsistent.
    """
    if not a.hyperplanes:
        raise ValueError("empty arrangement")
    normals = [h.normal for h in a.hyperplanes]
    primes = interpolation_primes(a)
    counts = [fieldcount.count_avoiding(normals, a.dimension, q) for q in primes]

    n = a.dimension
    coeffs = fieldcount.interpolate_polynomial(list(zip(primes[:n + 1],
                                                        counts[:n + 1])))
    if any(c.denominator != 1 for c in coeffs):
        raise InterpolationInconsistent(f"non-integer coefficients: {coeffs}")
    ints = [int(c) for c in coeffs]
    if ints[-1] != 1:
        raise InterpolationInconsistent(f"not monic of degree {n}: {ints}")
    poly = CharPoly(tuple(ints))
    control = primes[n + 1]
    if poly.evaluate(control) != counts[n + 1]:
        raise InterpolationInconsistent(
            f"control prime {control}: counted {counts[n + 1]}, "
            f"polynomial gives {poly.evaluate(control)}")
    return poly


def region_count(c: CharPoly) -> int:
    """Region count from the polynomial: (-1)^degree * value at -1."""
    count = (-1) ** c.degree * c.evaluate(-1)
    if count <= 0:
        raise ValueError(f"region count must be positive, got {count}")
    return count
