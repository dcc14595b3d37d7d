from __future__ import annotations

import networkx as nx
import pytest

from prismdom.graph_core import Graph, new_graph

ACCEPTANCE_LINES: list[str] = []


def to_nx(G: Graph) -> nx.Graph:
    H = nx.Graph()
    H.add_nodes_from(range(G.n))
    H.add_edges_from(G.edges)
    return H


def from_nx(H: nx.Graph) -> Graph:
    index = {v: i for i, v in enumerate(sorted(H.nodes))}
    return new_graph(len(index), [(index[u], index[v]) for u, v in H.edges])


@pytest.fixture
def p3() -> Graph:
    return new_graph(3, [(0, 1), (1, 2)])


@pytest.fixture
def c7() -> Graph:
    return new_graph(7, [(i, (i + 1) % 7) for i in range(7)])


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
