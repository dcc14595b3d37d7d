from __future__ import annotations

import math
import random

import networkx as nx
import pytest

from conftest import to_nx
from prismdom.graph_core import (
    INF,
    GraphError,
    all_pairs_distances,
    bfs_distances,
    closed_neighborhood,
    diameter,
    induced_subgraph,
    is_connected,
    is_dominating,
    new_graph,
    relabel,
)
from prismdom.universes import CONNECTED_LABELED_COUNTS, connected_graphs, random_connected_graph


def test_new_graph_dedups_and_sorts():
    G = new_graph(3, [(1, 0), (0, 1), (2, 1)])
    assert G.m == 2
    assert G.neighbors(1) == (0, 2)
    assert G.sorted_edges() == [(0, 1), (1, 2)]


@pytest.mark.parametrize("edges", [[(0, 0)], [(0, 3)], [(-1, 0)]])
def test_new_graph_rejects_bad_edges(edges):
    with pytest.raises(GraphError):
        new_graph(3, edges)


def test_domination_and_neighborhoods(p3):
    assert closed_neighborhood(p3, [0]) == {0, 1}
    assert is_dominating(p3, {1})
    assert not is_dominating(p3, {0})


def test_distances_and_diameter(c7):
    D = all_pairs_distances(c7)
    assert D[0, 3] == 3 and D[0, 4] == 3
    assert diameter(c7) == 3
    G = new_graph(4, [(0, 1), (2, 3)])
    assert not is_connected(G)
    assert bfs_distances(G, 0)[2] == INF
    assert diameter(G) == math.inf


def test_distances_match_networkx():
    rng = random.Random(3)
    for _ in range(30):
        G = random_connected_graph(rng.randint(2, 9), rng)
        D = all_pairs_distances(G)
        ref = dict(nx.all_pairs_shortest_path_length(to_nx(G)))
        assert all(D[u, v] == ref[u][v] for u in G.vertices for v in G.vertices)


def test_induced_subgraph_and_relabel(c7):
    H, members = induced_subgraph(c7, {0, 1, 2, 5})
    assert members == (0, 1, 2, 5)
    assert H.sorted_edges() == [(0, 1), (1, 2)]
    R = relabel(c7, {v: (v + 1) % 7 for v in range(7)})
    assert R.edges == c7.edges


def test_connected_graph_counts():
    for n in range(1, 6):
        assert sum(1 for _ in connected_graphs(n)) == CONNECTED_LABELED_COUNTS[n]
