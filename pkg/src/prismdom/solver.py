"""Exact domination numbers: plain, connected, weakly convex and convex.

All searches return the lexicographically smallest optimal set (as an
ascending tuple), so results do not depend on the search path.
"""

from __future__ import annotations

import enum
import itertools
import json
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from math import comb
from typing import Callable, Iterable, Sequence

import numpy as np

from . import geodesic
from ._bitgraph import BitGraph, bits, lex_less, to_mask
from .graph_core import Graph, GraphError, all_pairs_distances, is_connected, is_dominating
from .prism import Permutation, PrismGraph, build_prism, lift_set

MAX_SOLVER_ORDER = 64
MAX_ORACLE_ORDER = 16

# Below this many candidate subsets of one size the lexicographic subset
# search is used instead of connected-set enumeration.
LEX_SEARCH_LIMIT = 20_000

_CHECK_EVERY = 2048


class GammaVariant(enum.Enum):
    PLAIN = "plain"
    CONNECTED = "connected"
    WEAKLY_CONVEX = "weakly_convex"
    CONVEX = "convex"

    @classmethod
    def parse(cls, text: "str | GammaVariant") -> "GammaVariant":
        if isinstance(text, GammaVariant):
            return text
        key = text.strip().lower().replace("-", "_")
        try:
            return _ALIASES[key]
        except KeyError:
            raise ValueError(f"unknown variant {text!r}") from None

    @property
    def short(self) -> str:
        return {"plain": "dom", "connected": "connected", "weakly_convex": "wcon", "convex": "con"}[self.value]


_ALIASES = {
    "plain": GammaVariant.PLAIN, "dom": GammaVariant.PLAIN, "gamma": GammaVariant.PLAIN,
    "connected": GammaVariant.CONNECTED, "c": GammaVariant.CONNECTED,
    "weakly_convex": GammaVariant.WEAKLY_CONVEX, "wcon": GammaVariant.WEAKLY_CONVEX,
    "convex": GammaVariant.CONVEX, "con": GammaVariant.CONVEX,
}

OPTIMAL = "optimal"
INCONCLUSIVE = "inconclusive"
ABOVE_LIMIT = "above_limit"


@dataclass(frozen=True)
class GammaReport:
    """Outcome of one exact search.

    When the time budget runs out ``status`` is ``"inconclusive"``,
    ``value`` is None and ``lower_bound`` records the smallest size not yet
    ruled out.
    """

    variant: GammaVariant
    value: int | None
    witness: tuple[int, ...]
    explored: int
    elapsed: float
    status: str = OPTIMAL
    lower_bound: int = 0

    @property
    def optimal(self) -> bool:
        return self.status == OPTIMAL

    def to_dict(self, labels: Sequence[str] | None = None) -> dict:
        return {
            "variant": self.variant.value,
            "status": self.status,
            "value": self.value,
            "lower_bound": self.lower_bound,
            "witness": list(self.witness),
            "witness_labels": [str(labels[v]) if labels is not None else str(v) for v in self.witness],
            "explored": self.explored,
            "elapsed_ms": round(self.elapsed * 1000, 3),
        }

    def to_json(self, labels: Sequence[str] | None = None) -> str:
        return json.dumps(self.to_dict(labels), ensure_ascii=False)


class _Timeout(Exception):
    pass


class _Clock:
    __slots__ = ("deadline", "explored")

    def __init__(self, budget_ms: float | None):
        self.deadline = None if budget_ms is None else time.monotonic() + budget_ms / 1000.0
        self.explored = 0

    def tick(self, k: int = 1) -> None:
        before = self.explored
        self.explored += k
        if self.deadline is not None and (before // _CHECK_EVERY != self.explored // _CHECK_EVERY):
            if time.monotonic() > self.deadline:
                raise _Timeout

    def expired(self) -> bool:
        return self.deadline is not None and time.monotonic() > self.deadline


def _check_order(G: Graph, limit: int = MAX_SOLVER_ORDER) -> None:
    if G.n == 0:
        raise GraphError("the empty graph has no dominating set")
    if G.n > limit:
        raise GraphError(f"graph of order {G.n} exceeds the limit {limit}")


# plain domination -----------------------------------------------------------


def _can_dominate(bg: BitGraph, undom: int, k: int, allowed: int, clock: _Clock) -> bool:
    """Is there a set of at most ``k`` allowed vertices covering ``undom``?"""
    clock.tick()
    if not undom:
        return True
    if k == 0:
        return False
    closed = bg.closed
    best_opts = -1
    best = 0
    m = undom
    while m:
        low = m & -m
        m ^= low
        opts = closed[low.bit_length() - 1] & allowed
        c = opts.bit_count()
        if c == 0:
            return False
        if best_opts < 0 or c < best_opts:
            best_opts, best = c, opts
            if c == 1:
                break
    if undom.bit_count() > k * (max(bg.deg) + 1):
        return False
    while best:
        low = best & -best
        best ^= low
        if _can_dominate(bg, undom & ~closed[low.bit_length() - 1], k - 1, allowed, clock):
            return True
    return False


def _lexmin_dominating(bg: BitGraph, k: int, clock: _Clock) -> int:
    """Lexicographically least dominating set of size ``k`` (``k`` optimal)."""
    chosen = 0
    undom = bg.full
    start = 0
    for slot in range(k):
        for x in range(start, bg.n):
            after = bg.full & ~((1 << (x + 1)) - 1)
            rest = undom & ~bg.closed[x]
            if _can_dominate(bg, rest, k - slot - 1, after, clock):
                chosen |= 1 << x
                undom = rest
                start = x + 1
                break
        else:  # pragma: no cover - k is feasible by construction
            raise AssertionError("lexmin reconstruction failed")
    # a smaller completion would contradict optimality of k
    assert undom == 0
    return chosen


def _gamma_mask(bg: BitGraph, clock: _Clock, lower: int = 1) -> tuple[int, int]:
    k = max(lower, 1)
    while not _can_dominate(bg, bg.full, k, bg.full, clock):
        k += 1
    return k, _lexmin_dominating(bg, k, clock)


def gamma(G: Graph, budget_ms: float | None = None) -> GammaReport:
    """Domination number by iterative deepening branch-and-bound.

    Each node branches over the closed neighborhood of the undominated
    vertex with the fewest remaining candidates.
    """
    _check_order(G)
    t0 = time.perf_counter()
    clock = _Clock(budget_ms)
    bg = BitGraph(G)
    try:
        if budget_ms is not None and budget_ms <= 0:
            raise _Timeout
        k, mask = _gamma_mask(bg, clock)
    except _Timeout:
        return GammaReport(GammaVariant.PLAIN, None, (), clock.explored, time.perf_counter() - t0,
                           INCONCLUSIVE, 1)
    return GammaReport(GammaVariant.PLAIN, k, tuple(bits(mask)), clock.explored,
                       time.perf_counter() - t0, OPTIMAL, k)


# connected variants -----------------------------------------------------------


def _predicate(bg: BitGraph, variant: GammaVariant) -> Callable[[int], bool]:
    if variant is GammaVariant.CONNECTED:
        return lambda S: True
    if variant is GammaVariant.WEAKLY_CONVEX:
        return bg.is_weakly_convex
    if variant is GammaVariant.CONVEX:
        return bg.is_convex
    raise ValueError(variant)


def _esu_root(bg: BitGraph, c: int, root: int, pred: Callable[[int], bool], clock: _Clock) -> int:
    """Best connected dominating candidate of size ``c`` whose least vertex is ``root``.

    Connected sets are grown by exclusive extension: each one is produced
    exactly once.  Returns 0 when there is none.
    """
    n, full = bg.n, bg.full
    nbr, closed = bg.nbr, bg.closed
    gain = bg._gain
    allowed = full & ~((1 << (root + 1)) - 1)
    best = 0

    def extend(S: int, size: int, ext: int, cov: int) -> None:
        nonlocal best
        clock.tick()
        if size == c:
            if cov == full and (not best or lex_less(S, best)) and pred(S):
                best = S
            return
        left = c - size
        # each added vertex already lies in N[S] and has a neighbor in S
        if n - cov.bit_count() > gain[left if left < n else n]:
            return
        while ext:
            low = ext & -ext
            ext ^= low
            w = low.bit_length() - 1
            extend(S | low, size + 1, ext | (nbr[w] & ~cov & allowed), cov | closed[w])

    extend(1 << root, 1, nbr[root] & allowed, closed[root])
    return best


def _lex_search(bg: BitGraph, c: int, pred: Callable[[int], bool], clock: _Clock) -> int:
    """First connected dominating candidate of size ``c`` in lexicographic order."""
    n, full, closed = bg.n, bg.full, bg.closed
    # reach[i]: vertices with a closed neighbor >= i, i.e. still coverable
    reach = [0] * (n + 1)
    for i in range(n - 1, -1, -1):
        reach[i] = reach[i + 1] | closed[i]
    cap = max(bg.deg) + 1

    def dfs(start: int, left: int, S: int, cov: int) -> int:
        clock.tick()
        if left == 0:
            if cov == full and bg.is_connected_set(S) and pred(S):
                return S
            return 0
        undom = full & ~cov
        if undom & ~reach[start] or undom.bit_count() > left * cap:
            return 0
        for x in range(start, n - left + 1):
            hit = dfs(x + 1, left - 1, S | (1 << x), cov | closed[x])
            if hit:
                return hit
        return 0

    return dfs(0, c, 0, 0)


def _search_size(bg: BitGraph, c: int, pred: Callable[[int], bool], clock: _Clock,
                 workers: int = 1) -> int:
    if c >= bg.n:
        return bg.full if pred(bg.full) else 0
    if comb(bg.n, c) <= LEX_SEARCH_LIMIT:
        return _lex_search(bg, c, pred, clock)
    if workers > 1:
        return _search_size_parallel(bg, c, pred, clock, workers)
    # the lexicographically least set has the least root among all hits
    for root in range(bg.n - c + 1):
        hit = _esu_root(bg, c, root, pred, clock)
        if hit:
            return hit
    return 0


def _root_job(args) -> tuple[int, int, bool]:
    G, variant, c, root, deadline = args
    bg = BitGraph(G)
    clock = _Clock(None)
    clock.deadline = deadline
    try:
        return _esu_root(bg, c, root, _predicate(bg, variant), clock), clock.explored, False
    except _Timeout:
        return 0, clock.explored, True


_PARALLEL_CONTEXT: dict = {}


def _search_size_parallel(bg, c, pred, clock, workers):
    G, variant = _PARALLEL_CONTEXT["graph"], _PARALLEL_CONTEXT["variant"]
    roots = range(bg.n - c + 1)
    with ProcessPoolExecutor(max_workers=workers) as pool:
        results = list(pool.map(_root_job, [(G, variant, c, r, clock.deadline) for r in roots]))
    timed_out = False
    for hit, explored, to in results:
        clock.explored += explored
        timed_out |= to
        if hit and not timed_out:
            return hit
    if timed_out:
        raise _Timeout
    return 0


def gamma_variant(G: Graph, variant: GammaVariant | str, budget_ms: float | None = None,
                  workers: int = 1, limit: int | None = None) -> GammaReport:
    """Exact minimum (connected / weakly convex / convex) dominating set.

    Sizes are tried in increasing order starting at the domination number;
    for each size, connected candidate sets are enumerated and filtered by
    the variant's predicate.  ``workers > 1`` spreads the enumeration roots
    over processes; the result is identical.  With ``limit``, sizes above it
    are not searched and a miss is reported with status ``"above_limit"``.
    """
    variant = GammaVariant.parse(variant)
    if variant is GammaVariant.PLAIN:
        return gamma(G, budget_ms)
    _check_order(G)
    if not is_connected(G):
        raise GraphError(f"{variant.value} domination needs a connected graph")
    t0 = time.perf_counter()
    clock = _Clock(budget_ms)
    bg = BitGraph(G)
    pred = _predicate(bg, variant)
    c = 1
    _PARALLEL_CONTEXT.update(graph=G, variant=variant)
    try:
        if budget_ms is not None and budget_ms <= 0:
            raise _Timeout
        c, _ = _gamma_mask(bg, clock)
        while True:
            if limit is not None and c > limit:
                return GammaReport(variant, None, (), clock.explored, time.perf_counter() - t0, ABOVE_LIMIT, c)
            hit = _search_size(bg, c, pred, clock, workers)
            if hit:
                break
            c += 1
    except _Timeout:
        return GammaReport(variant, None, (), clock.explored, time.perf_counter() - t0, INCONCLUSIVE, c)
    finally:
        _PARALLEL_CONTEXT.clear()
    return GammaReport(variant, c, tuple(bits(hit)), clock.explored, time.perf_counter() - t0, OPTIMAL, c)


def holds(G: Graph, variant: GammaVariant | str, S: Iterable[int]) -> bool:
    """Does ``S`` satisfy the variant's dominating-set predicate (fast path)?"""
    variant = GammaVariant.parse(variant)
    bg = BitGraph(G)
    m = to_mask(S)
    if not bg.dominates(m):
        return False
    if variant is GammaVariant.PLAIN:
        return True
    return bg.is_connected_set(m) and _predicate(bg, variant)(m)


# brute-force oracle -----------------------------------------------------------


def cover_table(closed: Sequence[int]) -> np.ndarray:
    """``table[S]`` = union of ``closed[v]`` over the bits of ``S``, for all ``S``."""
    n = len(closed)
    table = np.zeros(1 << n, dtype=np.int64)
    for i in range(n):
        table[1 << i : 1 << (i + 1)] = table[: 1 << i] | closed[i]
    return table


def popcount_table(n: int) -> np.ndarray:
    table = np.zeros(1 << n, dtype=np.int8)
    for i in range(n):
        table[1 << i : 1 << (i + 1)] = table[: 1 << i] + 1
    return table


def reference_predicate(G: Graph, variant: GammaVariant) -> Callable[[frozenset], bool]:
    """Dominating-set predicate built only from :mod:`prismdom.geodesic`."""
    D = all_pairs_distances(G)
    return {
        GammaVariant.PLAIN: lambda S: is_dominating(G, S),
        GammaVariant.CONNECTED: lambda S: geodesic.is_connected_dominating(G, D, S),
        GammaVariant.WEAKLY_CONVEX: lambda S: geodesic.is_weakly_convex_dominating(G, D, S),
        GammaVariant.CONVEX: lambda S: geodesic.is_convex_dominating(G, D, S),
    }[variant]


def oracle_gamma_variant(G: Graph, variant: GammaVariant | str) -> GammaReport:
    """Brute force over all subsets, by cardinality then lexicographically."""
    variant = GammaVariant.parse(variant)
    _check_order(G, MAX_ORACLE_ORDER)
    if variant is not GammaVariant.PLAIN and not is_connected(G):
        raise GraphError(f"{variant.value} domination needs a connected graph")
    t0 = time.perf_counter()
    n = G.n
    closed = [sum(1 << w for w in G.adjacency[v]) | (1 << v) for v in range(n)]
    dominating = np.flatnonzero(cover_table(closed) == (1 << n) - 1)
    sizes = popcount_table(n)[dominating]
    pred = reference_predicate(G, variant)
    explored = 0
    for c in range(1, n + 1):
        cands = sorted((tuple(bits(int(m))) for m in dominating[sizes == c]))
        for cand in cands:
            explored += 1
            if pred(frozenset(cand)):
                return GammaReport(variant, c, cand, explored, time.perf_counter() - t0, OPTIMAL, c)
    raise AssertionError("the whole vertex set always qualifies on a connected graph")


def all_optimal_sets(G: Graph, variant: GammaVariant | str, size: int | None = None) -> list[tuple[int, ...]]:
    """Every set of the optimal (or given) size satisfying the variant, ascending."""
    variant = GammaVariant.parse(variant)
    if size is None:
        size = gamma_variant(G, variant).value
    bg = BitGraph(G)
    pred = _predicate(bg, variant) if variant is not GammaVariant.PLAIN else None
    out = []
    for combo in itertools.combinations(range(G.n), size):
        m = to_mask(combo)
        if bg.dominates(m) and (pred is None or (bg.is_connected_set(m) and pred(m))):
            out.append(combo)
    return out


# Constructions on prisms -------------------------------------------------------


@dataclass(frozen=True)
class PlusOneCertificate:
    """A minimum dominating set ``A = A1 + A2`` of the base graph and ``v`` in ``A1``.

    ``prism_set`` is ``A1`` in the base layer plus ``p(A2 + {v})`` in the
    copy layer, a connected dominating set of size ``|A| + 1``.
    """

    A1: frozenset[int]
    A2: frozenset[int]
    v: int
    prism_set: frozenset[int] = field(compare=False)


def _induced_connected(G: Graph, S: frozenset[int]) -> bool:
    return geodesic.is_connected_set(G, S)


def _covers(G: Graph, S: Iterable[int], target: Iterable[int]) -> bool:
    N = set(S)
    for v in list(N):
        N.update(G.adjacency[v])
    return set(target) <= N


class PlusOneSearch:
    """Certificate search for one base graph, reusable across permutations.

    The permutation-free conditions (a minimum dominating set ``A``, a
    split ``A1, A2`` with ``A1`` dominating ``V - A2`` and ``A1``
    connected) are resolved once here.
    """

    def __init__(self, G: Graph, gamma_sets: Sequence[tuple[int, ...]] | None = None):
        if not is_connected(G):
            raise GraphError("the base graph must be connected")
        self.graph = G
        self.bg = bg = BitGraph(G)
        if gamma_sets is None:
            gamma_sets = all_optimal_sets(G, GammaVariant.PLAIN)
        self._cover: dict[int, int] = {}
        self._conn: dict[int, bool] = {}
        self.splits: list[tuple[int, int, tuple[int, ...]]] = []
        for A in gamma_sets:
            Am = to_mask(A)
            for r in range(1, len(A) + 1):
                for A1 in itertools.combinations(A, r):
                    A1m = to_mask(A1)
                    A2m = Am & ~A1m
                    need = bg.full & ~A2m
                    if self.cover(A1m) & need == need and self.connected(A1m):
                        self.splits.append((A1m, A2m, A1))

    def cover(self, m: int) -> int:
        c = self._cover.get(m)
        if c is None:
            c = self._cover[m] = self.bg.cover(m)
        return c

    def connected(self, m: int) -> bool:
        c = self._conn.get(m)
        if c is None:
            c = self._conn[m] = self.bg.is_connected_set(m)
        return c

    def certificate(self, p: Permutation) -> "PlusOneCertificate | None":
        if p.n != self.graph.n:
            raise GraphError("permutation size does not match the graph")
        img = p.image
        full = self.bg.full

        def image(m: int) -> int:
            out = 0
            while m:
                low = m & -m
                out |= 1 << img[low.bit_length() - 1]
                m ^= low
            return out

        for A1m, A2m, A1 in self.splits:
            target = full & ~image(A1m)
            base = image(A2m)
            for v in A1:
                T = base | (1 << img[v])
                if self.cover(T) & target == target and self.connected(T):
                    A1s, A2s = frozenset(bits(A1m)), frozenset(bits(A2m))
                    P = build_prism(self.graph, p)
                    return PlusOneCertificate(A1s, A2s, v, lift_set(P, A1s, bits(T)))
        return None


def min_connected_dominating_plus_one_certificate(G: Graph, p: Permutation,
                                                  gamma_sets: Sequence[tuple[int, ...]] | None = None
                                                  ) -> PlusOneCertificate | None:
    """Search minimum dominating sets ``A`` for a split ``A1, A2`` and ``v`` in ``A1`` with

    1. ``A1`` dominates ``V - A2``;
    2. ``A1`` is connected;
    3. ``p(A2 + {v})`` dominates ``V - p(A1)``;
    4. ``p(A2 + {v})`` is connected.

    Returns the first certificate (minimum sets in lexicographic order,
    then smaller ``A1``, then smaller ``v``), or None.
    """
    return PlusOneSearch(G, gamma_sets).certificate(p)


class PartitionError(ValueError):
    """A partition fails one of the listed conditions; ``condition`` names it."""

    def __init__(self, condition: str, message: str):
        super().__init__(f"condition {condition}: {message}")
        self.condition = condition


def build_connected_dom_from_partition(G: Graph, p: Permutation, A1: Iterable[int], A2: Iterable[int],
                                       A3: Iterable[int]) -> frozenset[int]:
    """Connected dominating set ``A1 + A2 + p(A2 + A3)'`` of the prism.

    Checked conditions, in order: ``partition`` (parts disjoint),
    ``A2`` (``A2`` nonempty: its matching edges are what join the two
    halves), ``dominating`` (``A`` dominates ``G``), ``1`` (``A1 + A2`` dominates
    ``V - A3``), ``2`` (``A1 + A2`` connected), ``3`` (``p(A2 + A3)``
    connected), ``4`` (``p(A2 + A3)`` dominates ``V - p(A1)``).
    ``A1`` and ``A3`` may be empty.
    """
    A1, A2, A3 = frozenset(A1), frozenset(A2), frozenset(A3)
    if A1 & A2 or A1 & A3 or A2 & A3:
        raise PartitionError("partition", "parts overlap")
    V = frozenset(G.vertices)
    A = A1 | A2 | A3
    if not A <= V:
        raise PartitionError("partition", "vertex out of range")
    if not A2:
        raise PartitionError("A2", "A2 is empty, so nothing joins the two halves")
    if not is_dominating(G, A):
        raise PartitionError("dominating", "A does not dominate G")
    if not _covers(G, A1 | A2, V - A3):
        raise PartitionError("1", "A1 + A2 does not dominate V - A3")
    if not _induced_connected(G, A1 | A2):
        raise PartitionError("2", "A1 + A2 is not connected")
    T = p.apply(A2 | A3)
    if not _induced_connected(G, T):
        raise PartitionError("3", "p(A2 + A3) is not connected")
    if not _covers(G, T, V - p.apply(A1)):
        raise PartitionError("4", "p(A2 + A3) does not dominate V - p(A1)")
    return lift_set(build_prism(G, p), A1 | A2, T)


def prism_gamma(G: Graph, p: Permutation, variant: GammaVariant | str,
                budget_ms: float | None = None) -> tuple[PrismGraph, GammaReport]:
    P = build_prism(G, p)
    return P, gamma_variant(P.graph, variant, budget_ms)
