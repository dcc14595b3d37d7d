"""Graph and permutation universes for the theorem sweeps.

Exhaustive universes are all labeled graphs on ``n`` vertices (every edge
subset), filtered to connected ones; no isomorphism reduction.
"""

from __future__ import annotations

import itertools
import math
import random
from typing import Iterator

from .graph_core import Graph, new_graph
from .prism import Permutation

# connected labeled graphs on n vertices, n = 0..8 (OEIS A001187)
CONNECTED_LABELED_COUNTS = (1, 1, 1, 4, 38, 728, 26704, 1866256, 251548592)


def _pairs(n: int) -> list[tuple[int, int]]:
    return list(itertools.combinations(range(n), 2))


def _connected_edge_mask(n: int, pairs: list[tuple[int, int]], mask: int) -> bool:
    if n <= 1:
        return True
    adj = [0] * n
    k = 0
    m = mask
    while m:
        low = m & -m
        u, v = pairs[low.bit_length() - 1]
        adj[u] |= 1 << v
        adj[v] |= 1 << u
        m ^= low
        k += 1
    if k < n - 1:
        return False
    reached = frontier = 1
    while frontier:
        nb = 0
        while frontier:
            low = frontier & -frontier
            nb |= adj[low.bit_length() - 1]
            frontier ^= low
        frontier = nb & ~reached
        reached |= frontier
    return reached == (1 << n) - 1


def connected_graphs(n: int) -> Iterator[Graph]:
    """All connected labeled graphs on ``n`` vertices, by edge-subset index."""
    pairs = _pairs(n)
    for mask in range(1 << len(pairs)):
        if _connected_edge_mask(n, pairs, mask):
            yield new_graph(n, [pairs[i] for i in range(len(pairs)) if mask >> i & 1])


def connected_graphs_upto(nmax: int, nmin: int = 1) -> Iterator[Graph]:
    for n in range(nmin, nmax + 1):
        yield from connected_graphs(n)


def random_connected_graph(n: int, rng: random.Random, p: float = 0.5) -> Graph:
    """Uniform edge-subset sample (each edge with probability ``p``), rejected until connected."""
    pairs = _pairs(n)
    while True:
        mask = 0
        for i in range(len(pairs)):
            if rng.random() < p:
                mask |= 1 << i
        if _connected_edge_mask(n, pairs, mask):
            return new_graph(n, [pairs[i] for i in range(len(pairs)) if mask >> i & 1])


def random_connected_graphs(count: int, nmin: int, nmax: int, rng: random.Random) -> Iterator[Graph]:
    for _ in range(count):
        yield random_connected_graph(rng.randint(nmin, nmax), rng)


def permutations_for(n: int, trials: int, rng: random.Random, include_identity: bool = True) -> list[Permutation]:
    """All permutations when there are at most ``trials`` of them, else a seeded sample.

    The identity is always first when ``include_identity`` is set.
    """
    if math.factorial(n) <= trials:
        perms = [Permutation(p) for p in itertools.permutations(range(n))]
        if not include_identity:
            perms = [p for p in perms if not p.is_identity()]
        return perms
    out = [Permutation.identity(n)] if include_identity else []
    seen = {p.image for p in out}
    while len(out) < trials:
        p = Permutation.random(n, rng)
        if p.image not in seen:
            seen.add(p.image)
            out.append(p)
    return out
