"""Exact arrangements, matching polytopes, and LP-orientations of small graphs.

Pipeline: parse a graph, enumerate its simple paths and even simple cycles,
build the central hyperplane arrangement they span, enumerate regions with
exact integer witnesses, build the matching polytope's skeleton, orient it
from region witnesses, and verify that regions and orientations biject.
All arithmetic is exact; no floating point is used anywhere.
"""

from .arrangement import (Arrangement, CharPoly, Hyperplane, Region,
                          build_matching_arrangement, characteristic_polynomial,
                          enumerate_region_arrays, enumerate_regions,
                          interpolation_primes, region_count, region_of_point,
                          sequence_to_hyperplane)
from .errors import (DimensionTooLarge, GraphFormatError,
                     InterpolationInconsistent, MatcharrError, OnHyperplane,
                     SequenceCapExceeded, TieOnEdge)
from .graphs import (DEFAULT_SEQUENCE_CAP, EdgeSeq, EdgeSetKind, Graph,
                     Matching, classify_edge_set, enumerate_matchings,
                     enumerate_sequences, parse_graph)
from .orientations import (BACKWARD, FORWARD, BijectionReport, Orientation,
                           OrientationProperties, enumerate_lp_orientations,
                           orient_by_functional, orientation_properties,
                           orientation_to_dot, verify_bijection)
from .polytope import (InequalitySystem, Row, RowKind, Skeleton,
                       brute_force_vertices, build_skeleton,
                       check_matchings_feasible, edmonds_inequalities,
                       hyperplane_to_skeleton_edge, matching_to_vertex,
                       skeleton_to_dot, skeleton_to_json_dict)

__version__ = "0.1.0"

__all__ = [
    "Arrangement", "BACKWARD", "BijectionReport", "CharPoly",
    "DEFAULT_SEQUENCE_CAP", "DimensionTooLarge", "EdgeSeq", "EdgeSetKind",
    "FORWARD", "Graph", "GraphFormatError", "Hyperplane", "InequalitySystem",
    "InterpolationInconsistent", "Matching", "MatcharrError", "OnHyperplane",
    "Orientation", "OrientationProperties", "Region", "Row", "RowKind",
    "SequenceCapExceeded", "Skeleton", "TieOnEdge",
    "brute_force_vertices", "build_matching_arrangement", "build_skeleton",
    "characteristic_polynomial", "check_matchings_feasible",
    "classify_edge_set", "edmonds_inequalities", "enumerate_lp_orientations",
    "enumerate_matchings", "enumerate_region_arrays", "enumerate_regions",
    "enumerate_sequences", "hyperplane_to_skeleton_edge",
    "interpolation_primes", "matching_to_vertex", "orient_by_functional",
    "orientation_properties", "orientation_to_dot", "parse_graph",
    "region_count", "region_of_point", "sequence_to_hyperplane",
    "skeleton_to_dot", "skeleton_to_json_dict", "verify_bijection",
]
