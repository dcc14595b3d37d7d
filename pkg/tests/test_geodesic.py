from __future__ import annotations

import itertools
import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from prismdom._bitgraph import BitGraph, to_mask
from prismdom.geodesic import (
    GeodesicOverflow,
    enumerate_geodesics,
    interval,
    is_connected_set,
    is_convex,
    is_weakly_convex,
)
from prismdom.graph_core import GraphError, all_pairs_distances, new_graph
from prismdom.universes import random_connected_graph


def by_geodesics(G, S):
    """Convexity and weak convexity straight from the list of all shortest paths."""
    S = set(S)
    convex = weak = True
    for u, v in itertools.combinations(sorted(S), 2):
        paths = enumerate_geodesics(G, u, v)
        inside = [set(p) <= S for p in paths]
        convex &= all(inside)
        weak &= any(inside)
    return convex, weak


def test_cycle_intervals(c7):
    D = all_pairs_distances(c7)
    assert interval(D, 0, 3).members == {0, 1, 2, 3}
    assert interval(D, 0, 0).members == {0}
    assert enumerate_geodesics(c7, 0, 3) == [(0, 1, 2, 3)]
    assert is_weakly_convex(c7, D, {0, 1, 2, 3})
    assert not is_weakly_convex(c7, D, {0, 3})
    assert is_convex(c7, D, {0, 1, 2})


def test_interval_rejects_disconnected_pairs():
    G = new_graph(3, [(0, 1)])
    with pytest.raises(GraphError):
        interval(all_pairs_distances(G), 0, 2)


def test_geodesic_limits():
    G = new_graph(4, [(0, 1), (0, 2), (1, 3), (2, 3)])
    assert sorted(enumerate_geodesics(G, 0, 3)) == [(0, 1, 3), (0, 2, 3)]
    with pytest.raises(GeodesicOverflow):
        enumerate_geodesics(G, 0, 3, max_count=1)


def test_connected_set():
    G = new_graph(4, [(0, 1), (2, 3)])
    assert is_connected_set(G, {0, 1})
    assert not is_connected_set(G, {0, 2})
    assert is_connected_set(G, set())


@settings(max_examples=60, deadline=None)
@given(st.integers(2, 7), st.integers(0, 10_000))
def test_predicates_agree_with_geodesic_lists(n, seed):
    G = random_connected_graph(n, random.Random(seed), p=0.45)
    D = all_pairs_distances(G)
    bg = BitGraph(G)
    for mask in range(1, 1 << n):
        S = [v for v in range(n) if mask >> v & 1]
        convex, weak = by_geodesics(G, S)
        assert is_convex(G, D, S) == convex == bg.is_convex(to_mask(S))
        assert is_weakly_convex(G, D, S) == weak == bg.is_weakly_convex(to_mask(S))
