"""Geodesic intervals and the connected / weakly convex / convex set predicates.

These are the reference predicates.  They work on plain vertex sets and a
:class:`~prismdom.graph_core.DistanceMatrix`; the solver has its own bitmask
versions and the test-suite checks the two against each other and against
explicit geodesic enumeration.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Iterable

from .graph_core import INF, DistanceMatrix, Graph, GraphError, all_pairs_distances, is_dominating

MAX_GEODESIC_LENGTH = 15
MAX_GEODESIC_COUNT = 10**6


class GeodesicOverflow(RuntimeError):
    """Geodesic enumeration exceeded its length or count guard."""


@dataclass(frozen=True)
class Interval:
    u: int
    v: int
    members: frozenset[int]


def interval(D: DistanceMatrix, u: int, v: int) -> Interval:
    """All vertices on some shortest ``u``-``v`` path."""
    duv = D[u, v]
    if duv == INF:
        raise GraphError(f"vertices {u} and {v} lie in different components")
    ru, rv = D.row(u), D.row(v)
    return Interval(u, v, frozenset(w for w in range(D.n) if ru[w] + rv[w] == duv))


def _dist(G: Graph, D: DistanceMatrix | None) -> DistanceMatrix:
    return all_pairs_distances(G) if D is None else D


def _bfs_within(G: Graph, S: frozenset[int], source: int) -> dict[int, int]:
    dist = {source: 0}
    queue = deque([source])
    while queue:
        x = queue.popleft()
        for y in G.adjacency[x]:
            if y in S and y not in dist:
                dist[y] = dist[x] + 1
                queue.append(y)
    return dist


def is_connected_set(G: Graph, S: Iterable[int]) -> bool:
    S = frozenset(S)
    if len(S) <= 1:
        return True
    return len(_bfs_within(G, S, min(S))) == len(S)


def is_weakly_convex(G: Graph, D: DistanceMatrix | None, S: Iterable[int]) -> bool:
    """Distances inside ``G[S]`` equal distances in ``G`` for every pair of ``S``."""
    S = frozenset(S)
    if len(S) <= 1:
        return True
    D = _dist(G, D)
    for u in S:
        inner = _bfs_within(G, S, u)
        row = D.row(u)
        for v in S:
            if inner.get(v, INF) != row[v]:
                return False
    return True


def is_convex(G: Graph, D: DistanceMatrix | None, S: Iterable[int]) -> bool:
    """Every vertex of every shortest path between two members lies in ``S``."""
    S = frozenset(S)
    if len(S) <= 1:
        return True
    D = _dist(G, D)
    outside = [w for w in range(G.n) if w not in S]
    members = sorted(S)
    for i, u in enumerate(members):
        ru = D.row(u)
        for v in members[i + 1 :]:
            duv = ru[v]
            if duv == INF:
                return False
            rv = D.row(v)
            for w in outside:
                if ru[w] + rv[w] == duv:
                    return False
    return True


def enumerate_geodesics(G: Graph, u: int, v: int, D: DistanceMatrix | None = None,
                        max_length: int = MAX_GEODESIC_LENGTH,
                        max_count: int = MAX_GEODESIC_COUNT) -> list[tuple[int, ...]]:
    """Every shortest ``u``-``v`` path, as vertex tuples from ``u`` to ``v``.

    Paths are grown from ``u`` along edges that strictly decrease the
    distance to ``v``.
    """
    D = _dist(G, D)
    duv = D[u, v]
    if duv == INF:
        raise GraphError(f"vertices {u} and {v} lie in different components")
    if duv > max_length:
        raise GeodesicOverflow(f"d({u},{v})={duv} exceeds the length guard {max_length}")
    to_v = D.row(v)
    paths: list[tuple[int, ...]] = []

    def grow(path: list[int]) -> None:
        x = path[-1]
        if x == v:
            if len(paths) >= max_count:
                raise GeodesicOverflow(f"more than {max_count} geodesics between {u} and {v}")
            paths.append(tuple(path))
            return
        for y in G.adjacency[x]:
            if to_v[y] == to_v[x] - 1:
                path.append(y)
                grow(path)
                path.pop()

    grow([u])
    return paths


def is_connected_dominating(G: Graph, D: DistanceMatrix | None, S: Iterable[int]) -> bool:
    S = frozenset(S)
    return is_dominating(G, S) and is_connected_set(G, S)


def is_weakly_convex_dominating(G: Graph, D: DistanceMatrix | None, S: Iterable[int]) -> bool:
    S = frozenset(S)
    return is_dominating(G, S) and is_weakly_convex(G, D, S)


def is_convex_dominating(G: Graph, D: DistanceMatrix | None, S: Iterable[int]) -> bool:
    S = frozenset(S)
    return is_dominating(G, S) and is_convex(G, D, S)
