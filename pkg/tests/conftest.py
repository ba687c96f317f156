"""Shared fixtures: the connected-graph corpus and a session-wide cache of
per-graph pipeline results, so the slower enumeration work runs once."""

from __future__ import annotations

import functools
from collections import Counter
from types import SimpleNamespace

import pytest

from matcharr import (
    Graph,
    build_matching_arrangement,
    build_skeleton,
    characteristic_polynomial,
    enumerate_region_arrays,
)

import graphgen

EXPECTED_COUNTS = {1: 1, 2: 1, 3: 3, 4: 5, 5: 12, 6: 30}


@functools.lru_cache(maxsize=None)
def region_bundle(g: Graph) -> SimpleNamespace:
    a = build_matching_arrangement(g)
    signs, witnesses = enumerate_region_arrays(a)
    return SimpleNamespace(
        arrangement=a,
        signs=signs,
        witnesses=witnesses,
        skeleton=build_skeleton(g),
    )


@functools.lru_cache(maxsize=None)
def charpoly_of(g: Graph):
    return characteristic_polynomial(region_bundle(g).arrangement)


@pytest.fixture(scope="session")
def all_graphs() -> list[tuple[str, Graph]]:
    graphs = graphgen.fixture_graphs(6)
    counts = Counter(g.edge_count for _, g in graphs)
    assert counts == EXPECTED_COUNTS
    return graphs


@pytest.fixture(scope="session")
def bundle():
    return region_bundle


@pytest.fixture(scope="session")
def charpoly_cache():
    return charpoly_of
