from __future__ import annotations

import random

import networkx as nx
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import from_nx, to_nx
from prismdom.formats import (
    FormatError,
    Sidecar,
    format_edge_list,
    from_graph6,
    parse_edge_list,
    read_graph,
    to_dot,
    to_graph6,
)
from prismdom.graph_core import new_graph
from prismdom.universes import random_connected_graph


@st.composite
def graphs(draw, max_n=70):
    n = draw(st.integers(0, max_n))
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)] if n <= 12 else []
    if pairs:
        edges = draw(st.lists(st.sampled_from(pairs), max_size=len(pairs)))
    else:
        edges = draw(st.lists(st.tuples(st.integers(0, max(n - 1, 0)), st.integers(0, max(n - 1, 0))), max_size=40))
        edges = [e for e in edges if e[0] != e[1]]
    return new_graph(n, edges)


@settings(max_examples=150, deadline=None)
@given(graphs())
def test_round_trips(G):
    assert parse_edge_list(format_edge_list(G, "x")) == G
    assert from_graph6(to_graph6(G)) == G
    assert from_graph6(to_graph6(G, header=True)) == G


def test_graph6_matches_networkx():
    rng = random.Random(7)
    for n in (1, 2, 5, 9, 30, 63, 64, 100):
        G = random_connected_graph(n, rng, p=0.3)
        ours = to_graph6(G)
        theirs = nx.to_graph6_bytes(to_nx(G), header=False).strip()
        assert ours == theirs
        assert nx.utils.graphs_equal(to_nx(G), to_nx(from_nx(nx.from_graph6_bytes(ours))))


def test_long_graph6_size():
    G = new_graph(300, [(0, 299)])
    assert to_graph6(G)[:1] == b"~"
    assert from_graph6(to_graph6(G)) == G


def test_parse_errors_name_line_and_column():
    with pytest.raises(FormatError) as exc:
        parse_edge_list("3 2\n0 1\n1 x\n")
    assert exc.value.line == 3 and exc.value.column == 3
    with pytest.raises(FormatError, match="edge"):
        parse_edge_list("3 2\n0 1\n")
    with pytest.raises(FormatError):
        parse_edge_list("3 1\n0 0\n")
    with pytest.raises(FormatError):
        from_graph6(b"A\x7f")


def test_comments_and_blank_lines_are_skipped():
    G = parse_edge_list("# a path\n\n3 2\n0 1  # first\n1 2\n")
    assert G.sorted_edges() == [(0, 1), (1, 2)]


def test_dot_and_sidecar(tmp_path):
    G = new_graph(2, [(0, 1)])
    dot = to_dot(G, ["a", "b'"], highlight=frozenset({1}))
    assert "--" in dot and "b'" in dot
    s = Sidecar(2, ("a", "b"), (1, 0), family="x")
    assert Sidecar.from_json(s.to_json()) == s
    with pytest.raises(FormatError):
        Sidecar.from_json("{")
    path = tmp_path / "g.g6"
    path.write_bytes(to_graph6(G) + b"\n")
    assert read_graph(path) == G
