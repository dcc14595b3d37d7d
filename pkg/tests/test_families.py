from __future__ import annotations

import networkx as nx
import pytest

from conftest import to_nx
from prismdom.families import FAMILIES, cycle_gadget, make_family, path_gadget, sept_path_gadget, spider_tree, star
from prismdom.graph_core import is_connected


def test_sizes():
    assert cycle_gadget(2).graph.n == 13 and cycle_gadget(2).graph.m == 14
    assert path_gadget(2).graph.n == 11 and path_gadget(2).graph.m == 10
    assert spider_tree(3, 2).graph.n == 10
    G = sept_path_gadget(3).graph
    assert G.n == 3 * 3 + 4
    assert G.m == 2 + 4 * 3 + 2


@pytest.mark.parametrize("name,k,l", [("path", 5, None), ("cycle", 7, None), ("star", 4, None),
                                      ("complete", 4, None), ("cycle-gadget", 2, None), ("path-gadget", 3, None),
                                      ("spider-tree", 3, 2), ("sept-path-gadget", 4, None)])
def test_all_families_connected(name, k, l):
    fam = make_family(name, k, l)
    assert is_connected(fam.graph)
    assert len(fam.label_strings()) == fam.graph.n


def test_trees_are_trees():
    assert nx.is_tree(to_nx(spider_tree(2, 3).graph))
    assert nx.is_tree(to_nx(path_gadget(3).graph))
    assert nx.is_tree(to_nx(star(5).graph))


def test_bundled_permutations():
    g = sept_path_gadget(3)
    p = g.canonical_perm
    assert p(g.id_of[2]) == g.id_of[6]
    assert p(g.id_of[6]) == g.id_of[(5, 1)]
    assert p(g.id_of[(5, 1)]) == g.id_of[(3, 1)]
    assert p(g.id_of[(3, 1)]) == g.id_of[2]
    h = path_gadget(2)
    assert h.canonical_perm(h.id_of[(2, 1)]) == h.id_of[(2, 4)]
    t = spider_tree(3, 1)
    assert t.canonical_perm.cycles() == [(1, 2, 3)]
    assert star(3).canonical_perm.cycles() == [(0, 1)]
    assert g.perm("(2 6)").cycles() == [(g.id_of[2], g.id_of[6])]


def test_sept_spine_and_cross_edges():
    g = sept_path_gadget(3)
    G, ids = g.graph, g.id_of
    assert G.has_edge(ids[1], ids[2]) and G.has_edge(ids[6], ids[7])
    assert G.has_edge(ids[(4, 1)], ids[(4, 3)])
    assert not G.has_edge(ids[(4, 2)], ids[(4, 3)])
    assert nx.shortest_path_length(to_nx(G), ids[2], ids[6]) == 4


def test_bad_parameters():
    with pytest.raises(ValueError):
        make_family("nope", 1)
    with pytest.raises(ValueError):
        spider_tree(1, 1)
    with pytest.raises(ValueError):
        make_family("cycle", 7, 2)
    assert set(FAMILIES) == {"path", "cycle", "star", "complete", "cycle-gadget", "path-gadget", "spider-tree",
                             "sept-path-gadget"}
