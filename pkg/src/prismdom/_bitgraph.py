"""Bitmask view of a graph used by the exact search.

Vertex ``v`` is bit ``1 << v``.  Distances come from scipy's BFS rather
than from :mod:`prismdom.graph_core`, so the fast predicates here and the
reference predicates in :mod:`prismdom.geodesic` share no code.
"""

from __future__ import annotations

import numpy as np
from scipy.sparse import csr_matrix
from scipy.sparse.csgraph import shortest_path

from .graph_core import Graph

MAX_ORDER = 64


def bits(mask: int) -> list[int]:
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return out


def to_mask(S) -> int:
    m = 0
    for v in S:
        m |= 1 << v
    return m


def lex_less(a: int, b: int) -> bool:
    """Compare equal-size sets as ascending tuples."""
    x = a ^ b
    return bool(a & x & -x)


def _pack(rows: np.ndarray) -> list:
    """Pack a boolean array along its last axis into Python int masks."""
    n = rows.shape[-1]
    weights = np.left_shift(np.uint64(1), np.arange(n, dtype=np.uint64))
    packed = (rows.astype(np.uint64) * weights).sum(axis=-1, dtype=np.uint64)
    return packed.tolist()


class BitGraph:
    """Neighbor masks, distances and geodesic-interval masks of a graph."""

    __slots__ = ("n", "full", "nbr", "closed", "deg", "dist", "connected", "_interval", "_gain")

    def __init__(self, G: Graph):
        if G.n > MAX_ORDER:
            raise ValueError(f"graph of order {G.n} exceeds the solver limit {MAX_ORDER}")
        n = self.n = G.n
        self.full = (1 << n) - 1
        self.nbr = [to_mask(a) for a in G.adjacency]
        self.closed = [m | (1 << v) for v, m in enumerate(self.nbr)]
        self.deg = [len(a) for a in G.adjacency]
        if n:
            u, v = zip(*G.edges) if G.edges else ((), ())
            A = csr_matrix((np.ones(len(u)), (u, v)), shape=(n, n))
            self.dist = shortest_path(A, method="D", directed=False, unweighted=True)
        else:
            self.dist = np.zeros((0, 0))
        self.connected = bool(np.isfinite(self.dist).all())
        self._interval = None
        gains = sorted((max(d - 1, 0) for d in self.deg), reverse=True)
        self._gain = [0]
        for g in gains:
            self._gain.append(self._gain[-1] + g)

    @property
    def interval(self) -> list[list[int]]:
        """``interval[u][v]``: mask of vertices on shortest ``u``-``v`` paths."""
        if self._interval is None:
            D = self.dist
            on = D[:, None, :] + D.T[None, :, :] == D[:, :, None]
            self._interval = _pack(on)
        return self._interval

    def max_gain(self, k: int) -> int:
        """Upper bound on new coverage from adding ``k`` vertices adjacent to a set."""
        return self._gain[min(k, self.n)]

    def cover(self, S: int) -> int:
        cov = 0
        closed = self.closed
        while S:
            low = S & -S
            cov |= closed[low.bit_length() - 1]
            S ^= low
        return cov

    def dominates(self, S: int) -> bool:
        return self.cover(S) == self.full

    def is_connected_set(self, S: int) -> bool:
        if S & (S - 1) == 0:
            return True
        nbr = self.nbr
        reached = frontier = S & -S
        while frontier:
            nb = 0
            while frontier:
                low = frontier & -frontier
                nb |= nbr[low.bit_length() - 1]
                frontier ^= low
            frontier = nb & S & ~reached
            reached |= frontier
        return reached == S

    def is_weakly_convex(self, S: int) -> bool:
        # Every pair has a first geodesic step inside S; induction on distance
        # then yields a whole geodesic inside S.
        members = bits(S)
        if len(members) <= 1:
            return True
        I = self.interval
        nbr = self.nbr
        for i, u in enumerate(members[:-1]):
            step = nbr[u] & S
            Iu = I[u]
            for v in members[i + 1 :]:
                if not step & Iu[v]:
                    return False
        return True

    def is_convex(self, S: int) -> bool:
        members = bits(S)
        if len(members) <= 1:
            return True
        I = self.interval
        out = self.full & ~S
        for i, u in enumerate(members[:-1]):
            Iu = I[u]
            for v in members[i + 1 :]:
                if Iu[v] & out:
                    return False
        return True
