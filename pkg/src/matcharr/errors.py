"""Exception types shared across the package."""

from __future__ import annotations


class MatcharrError(Exception):
    """Base class for every error this library raises on purpose."""


class GraphFormatError(MatcharrError):
    """Edge-list input violates the graph format (loop, parallel edge, bad line)."""


class SequenceCapExceeded(MatcharrError):
    """Path/cycle enumeration grew past the configured cap."""


class OnHyperplane(MatcharrError):
    """A query point lies exactly on an arrangement hyperplane."""

    def __init__(self, hyperplane_index: int):
        self.hyperplane_index = hyperplane_index
        super().__init__(f"point lies on hyperplane {hyperplane_index + 1}")


class TieOnEdge(MatcharrError):
    """A functional takes equal values on the endpoints of a skeleton edge."""

    def __init__(self, edge: tuple[int, int]):
        self.edge = edge
        super().__init__(f"functional ties on skeleton edge {edge}")


class DimensionTooLarge(MatcharrError):
    """A desk-scale oracle was asked to run beyond its guard."""


class InterpolationInconsistent(MatcharrError):
    """The control prime disagrees with the interpolated polynomial."""
