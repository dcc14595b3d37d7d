"""Immutable simple graphs on dense integer ids, neighborhoods and hop distances."""

from __future__ import annotations

import math
from collections import deque
from dataclasses import dataclass, field
from typing import Iterable, Sequence

#: Marker for the distance between vertices in different components.
INF = math.inf

#: Largest vertex count accepted by the distance routines.
MAX_DISTANCE_ORDER = 4096

VertexSet = frozenset  # frozenset[int]; sort explicitly wherever order matters


class GraphError(ValueError):
    """Raised for malformed graph input."""


@dataclass(frozen=True)
class Graph:
    """Undirected simple graph with vertices ``0..n-1``.

    ``adjacency[v]`` is the ascending tuple of neighbors of ``v`` and
    ``edges`` holds each edge once as ``(u, v)`` with ``u < v``.
    """

    n: int
    adjacency: tuple[tuple[int, ...], ...]
    edges: frozenset[tuple[int, int]] = field(repr=False)

    @property
    def vertices(self) -> range:
        return range(self.n)

    @property
    def m(self) -> int:
        return len(self.edges)

    def neighbors(self, v: int) -> tuple[int, ...]:
        return self.adjacency[v]

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    def degrees(self) -> list[int]:
        return [len(a) for a in self.adjacency]

    def max_degree(self) -> int:
        return max((len(a) for a in self.adjacency), default=0)

    def has_edge(self, u: int, v: int) -> bool:
        return (min(u, v), max(u, v)) in self.edges

    def sorted_edges(self) -> list[tuple[int, int]]:
        return sorted(self.edges)

    def full_set(self) -> frozenset[int]:
        return frozenset(range(self.n))


def new_graph(n: int, edges: Iterable[Sequence[int]] = ()) -> Graph:
    """Build a graph on ``n`` vertices; duplicate edges collapse to one."""
    if n < 0:
        raise GraphError(f"vertex count must be non-negative, got {n}")
    edge_set: set[tuple[int, int]] = set()
    for pair in edges:
        u, v = int(pair[0]), int(pair[1])
        if not (0 <= u < n and 0 <= v < n):
            raise GraphError(f"edge ({u}, {v}) out of range for n={n}")
        if u == v:
            raise GraphError(f"self-loop at vertex {u}")
        edge_set.add((u, v) if u < v else (v, u))
    adj: list[list[int]] = [[] for _ in range(n)]
    for u, v in edge_set:
        adj[u].append(v)
        adj[v].append(u)
    return Graph(n, tuple(tuple(sorted(a)) for a in adj), frozenset(edge_set))


def _check_set(G: Graph, S: Iterable[int]) -> frozenset[int]:
    S = frozenset(S)
    for v in S:
        if not 0 <= v < G.n:
            raise GraphError(f"vertex {v} not in graph of order {G.n}")
    return S


def is_connected(G: Graph) -> bool:
    if G.n <= 1:
        return True
    seen = {0}
    queue = deque([0])
    while queue:
        u = queue.popleft()
        for w in G.adjacency[u]:
            if w not in seen:
                seen.add(w)
                queue.append(w)
    return len(seen) == G.n


def closed_neighborhood(G: Graph, S: Iterable[int]) -> frozenset[int]:
    S = _check_set(G, S)
    out = set(S)
    for v in S:
        out.update(G.adjacency[v])
    return frozenset(out)


def is_dominating(G: Graph, S: Iterable[int]) -> bool:
    return len(closed_neighborhood(G, S)) == G.n


def bfs_distances(G: Graph, source: int) -> list[float]:
    """Hop distances from ``source``; unreachable vertices get :data:`INF`."""
    dist: list[float] = [INF] * G.n
    dist[source] = 0
    queue = deque([source])
    while queue:
        u = queue.popleft()
        du = dist[u] + 1
        for w in G.adjacency[u]:
            if dist[w] == INF:
                dist[w] = du
                queue.append(w)
    return dist


@dataclass(frozen=True)
class DistanceMatrix:
    """All-pairs hop distances, indexed as ``D[u, v]``.

    Finite entries are ints; pairs in different components hold :data:`INF`.
    """

    rows: tuple[tuple[float, ...], ...]

    @property
    def n(self) -> int:
        return len(self.rows)

    def __getitem__(self, uv: tuple[int, int]) -> float:
        u, v = uv
        return self.rows[u][v]

    def row(self, u: int) -> tuple[float, ...]:
        return self.rows[u]

    def is_finite(self) -> bool:
        return all(d != INF for r in self.rows for d in r)

    def max_finite(self) -> int:
        return max((int(d) for r in self.rows for d in r if d != INF), default=0)


def all_pairs_distances(G: Graph) -> DistanceMatrix:
    if G.n > MAX_DISTANCE_ORDER:
        raise GraphError(f"graph of order {G.n} exceeds the distance-matrix limit {MAX_DISTANCE_ORDER}")
    return DistanceMatrix(tuple(tuple(bfs_distances(G, s)) for s in range(G.n)))


def diameter(G: Graph, D: DistanceMatrix | None = None) -> float:
    """Largest distance; :data:`INF` for a disconnected graph, 0 for n <= 1."""
    if D is None:
        D = all_pairs_distances(G)
    if not D.is_finite():
        return INF
    return D.max_finite()


def induced_subgraph(G: Graph, S: Iterable[int]) -> tuple[Graph, tuple[int, ...]]:
    """Subgraph induced by ``S``, relabeled in ascending order.

    Returns the subgraph and the map ``new id -> original id``.
    """
    members = tuple(sorted(_check_set(G, S)))
    index = {v: i for i, v in enumerate(members)}
    edges = [(index[u], index[v]) for u, v in G.edges if u in index and v in index]
    return new_graph(len(members), edges), members


def relabel(G: Graph, mapping: Sequence[int]) -> Graph:
    """Image of ``G`` under the bijection ``v -> mapping[v]``."""
    return new_graph(G.n, [(mapping[u], mapping[v]) for u, v in G.edges])
