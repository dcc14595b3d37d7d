"""Mechanical checks of the domination results on prisms.

Every check sweeps a graph universe (all connected labeled graphs up to a
small order, then seeded random graphs up to ``nmax``) together with
permutations and returns a :class:`CheckResult`.  A failure always carries
a counterexample that has been re-checked with the reference predicates of
:mod:`prismdom.geodesic`.  Instances outside a statement's hypothesis that
break its conclusion are reported in ``notes`` and never count as failures.
"""

from __future__ import annotations

import itertools
import json
import math
import random
import time
from dataclasses import dataclass, field
from typing import Callable, Iterable, Iterator

import networkx as nx
import numpy as np

from . import geodesic
from ._bitgraph import BitGraph, bits, to_mask
from .formats import to_graph6
from .graph_core import INF, Graph, all_pairs_distances, diameter, is_dominating, new_graph
from . import families as fm
from .prism import PRIME, Permutation, build_prism, format_label, identity_prism
from .solver import (
    ABOVE_LIMIT,
    OPTIMAL,
    GammaVariant,
    PartitionError,
    PlusOneSearch,
    build_connected_dom_from_partition,
    all_optimal_sets,
    cover_table,
    gamma,
    gamma_variant,
    oracle_gamma_variant,
)
from .universes import connected_graphs_upto, random_connected_graph, permutations_for, random_connected_graphs

EXHAUSTIVE_MAX = 5


@dataclass
class CheckResult:
    check_id: str
    universe: str
    passed: bool
    seed: int
    counterexample: dict | None = None
    stats: dict = field(default_factory=dict)
    notes: list[str] = field(default_factory=list)
    elapsed: float = 0.0

    def to_dict(self) -> dict:
        return {
            "check_id": self.check_id,
            "universe": self.universe,
            "pass": self.passed,
            "seed": self.seed,
            "counterexample": self.counterexample,
            "stats": self.stats,
            "notes": self.notes,
            "elapsed_ms": round(self.elapsed * 1000, 1),
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True)

    def summary(self) -> str:
        return f"{'PASS' if self.passed else 'FAIL'} {self.check_id}: {self.universe}"


def _describe(G: Graph, p: Permutation | None = None, **sets: Iterable[int]) -> dict:
    out = {"graph6": to_graph6(G).decode(), "n": G.n, "edges": [list(e) for e in G.sorted_edges()]}
    if p is not None:
        out["perm_image"] = list(p.image)
        out["perm"] = p.to_cycle_string()
    for name, S in sets.items():
        out[name] = sorted(S)
    return out


def _universe(nmax: int, rng: random.Random, exhaustive_max: int, samples: int,
              nmin: int = 2) -> Iterator[Graph]:
    yield from connected_graphs_upto(min(nmax, exhaustive_max), nmin)
    if nmax > exhaustive_max and samples > 0:
        yield from random_connected_graphs(samples, max(exhaustive_max + 1, nmin), nmax, rng)


def _universe_text(nmax: int, exhaustive_max: int, samples: int, extra: str = "") -> str:
    text = f"all connected labeled graphs 2<=n<={min(nmax, exhaustive_max)}"
    if nmax > exhaustive_max and samples > 0:
        text += f" + {samples} random connected graphs n={exhaustive_max + 1}..{nmax}"
    return text + extra


class _Sweep:
    """Bookkeeping shared by the checks: first failure wins."""

    def __init__(self, check_id: str, seed: int):
        self.check_id = check_id
        self.seed = seed
        self.counterexample: dict | None = None
        self.stats: dict = {}
        self.notes: list[str] = []
        self.t0 = time.perf_counter()

    def count(self, key: str, k: int = 1) -> None:
        self.stats[key] = self.stats.get(key, 0) + k

    def fail(self, counterexample: dict) -> None:
        if self.counterexample is None:
            self.counterexample = counterexample

    @property
    def failed(self) -> bool:
        return self.counterexample is not None

    def result(self, universe: str) -> CheckResult:
        return CheckResult(self.check_id, universe, self.counterexample is None, self.seed,
                           self.counterexample, self.stats, self.notes, time.perf_counter() - self.t0)


def _dominating_masks(bg: BitGraph) -> list[int]:
    return np.flatnonzero(cover_table(bg.closed) == bg.full).tolist()


# Lower bound: connected domination of a prism exceeds gamma(G) --------------------


def check_lemma_plus1(nmax: int = 7, trials: int = 4, seed: int = 0, exhaustive_max: int = EXHAUSTIVE_MAX,
                      samples: int = 40) -> CheckResult:
    """``gamma_c(prism) >= gamma(G) + 1`` for every connected ``G`` and permutation."""
    sw = _Sweep("lemma-plus1", seed)
    rng = random.Random(seed)
    k1 = new_graph(1, [])
    if gamma_variant(identity_prism(k1).graph, GammaVariant.CONNECTED).value <= gamma(k1).value:
        sw.notes.append("one-vertex graph left out: its prism K2 is dominated by one vertex, "
                        "so the bound needs n >= 2")
    for G in _universe(nmax, rng, exhaustive_max, samples):
        sw.count("graphs")
        g = gamma(G).value
        for p in permutations_for(G.n, trials, rng):
            sw.count("prisms")
            P = build_prism(G, p)
            r = gamma_variant(P.graph, GammaVariant.CONNECTED, limit=g)
            if r.status == OPTIMAL:
                D = frozenset(r.witness)
                sw.fail(_describe(G, p, D=D) | {
                    "gamma_G": oracle_gamma_variant(G, "plain").value,
                    "revalidated": geodesic.is_connected_dominating(P.graph, None, D),
                })
            if sw.failed:
                break
        if sw.failed:
            break
    return sw.result(_universe_text(nmax, exhaustive_max, samples, f" x {trials} permutations each"))


def check_domination_sandwich(nmax: int = 7, trials: int = 4, seed: int = 0,
                              exhaustive_max: int = EXHAUSTIVE_MAX, samples: int = 40) -> CheckResult:
    """``gamma(G) <= gamma(prism) <= 2 gamma(G)`` and the chain of the four invariants on ``G``."""
    sw = _Sweep("sandwich", seed)
    rng = random.Random(seed)
    for G in _universe(nmax, rng, exhaustive_max, samples):
        sw.count("graphs")
        vals = [gamma_variant(G, v).value for v in GammaVariant]
        if vals != sorted(vals):
            sw.fail(_describe(G) | {"chain": vals, "revalidated": [oracle_gamma_variant(G, v).value
                                                                   for v in GammaVariant] == vals})
            break
        g = vals[0]
        for p in permutations_for(G.n, trials, rng):
            sw.count("prisms")
            P = build_prism(G, p)
            r = gamma(P.graph)
            if not g <= r.value <= 2 * g:
                sw.fail(_describe(G, p, witness=r.witness) | {
                    "gamma_G": g, "gamma_prism": r.value,
                    "revalidated": is_dominating(P.graph, r.witness)})
                break
        if sw.failed:
            break
    return sw.result(_universe_text(nmax, exhaustive_max, samples, f" x {trials} permutations each"))


# V and V' in prisms of small-diameter graphs -------------------------------------


def find_violating_permutation(G: Graph) -> Permutation:
    """A permutation under which ``V`` is not weakly convex in the prism.

    Needs ``diam(G) >= 4``: a pair at distance at least 4 is mapped onto an
    edge, which gives a path of length 3 through the copy layer.
    """
    D = all_pairs_distances(G)
    d = diameter(G, D)
    if d == INF or d < 4:
        raise ValueError(f"needs a connected graph of diameter >= 4, got {d}")
    u, v = next((a, b) for a in range(G.n) for b in range(a + 1, G.n) if D[a, b] >= 4)
    a, b = G.sorted_edges()[0]
    image = [-1] * G.n
    image[u], image[v] = a, b
    rest = iter(w for w in range(G.n) if w not in (a, b))
    for x in range(G.n):
        if image[x] < 0:
            image[x] = next(rest)
    p = Permutation(tuple(image))
    P = build_prism(G, p)
    assert not geodesic.is_weakly_convex(P.graph, None, range(G.n))
    return p


def check_diam_V_sets(nmax: int = 7, trials: int = 4, seed: int = 0, exhaustive_max: int = EXHAUSTIVE_MAX,
                      samples: int = 40) -> CheckResult:
    """``V`` and ``V'`` in prisms: weakly convex dominating when diam <= 3,
    convex dominating when diam <= 2; violating permutations when diam >= 4."""
    sw = _Sweep("diam-v-sets", seed)
    rng = random.Random(seed)
    for G in _universe(nmax, rng, exhaustive_max, samples):
        n = G.n
        d = diameter(G)
        sw.count(f"graphs_diam_{d}")
        V, Vc = (1 << n) - 1, ((1 << n) - 1) << n
        if d >= 4:
            p1 = find_violating_permutation(G)
            p2 = p1.inverse()
            bad1 = BitGraph(build_prism(G, p1).graph).is_weakly_convex(V)
            bad2 = BitGraph(build_prism(G, p2).graph).is_weakly_convex(Vc)
            sw.count("violating_pairs_built")
            if bad1 or bad2:
                sw.fail(_describe(G, p1) | {"reason": "violating permutation failed",
                                            "revalidated": True})
                break
            continue
        for p in permutations_for(n, trials, rng):
            P = build_prism(G, p)
            bg = BitGraph(P.graph)
            sw.count("prisms")
            for name, S in (("V", V), ("V'", Vc)):
                wc = bg.dominates(S) and bg.is_weakly_convex(S)
                cx = bg.dominates(S) and bg.is_convex(S)
                if not wc:
                    sw.fail(_describe(G, p, S=bits(S)) | {"set": name, "claim": "weakly convex dominating",
                            "revalidated": not geodesic.is_weakly_convex_dominating(P.graph, None, bits(S))})
                elif d <= 2 and not cx:
                    sw.fail(_describe(G, p, S=bits(S)) | {"set": name, "claim": "convex dominating",
                            "revalidated": not geodesic.is_convex_dominating(P.graph, None, bits(S))})
                elif d == 3 and not cx:
                    sw.count("diam3_nonconvex_V_witnesses")
            if sw.failed:
                break
        if sw.failed:
            break
    if sw.stats.get("diam3_nonconvex_V_witnesses"):
        sw.notes.append("diameter-3 graphs where V or V' is not convex: the diam <= 2 hypothesis "
                        "of the convex statement is needed")
    return sw.result(_universe_text(nmax, exhaustive_max, samples, f" x {trials} permutations each"))


# Structure of dominating sets of prisms --------------------------------------------


def check_D1D2_structure(nmax: int = 7, trials: int = 3, seed: int = 0, exhaustive_max: int = EXHAUSTIVE_MAX,
                         samples: int = 20) -> CheckResult:
    """For connected dominating sets ``D`` of a prism (so also weakly convex
    and convex ones): ``|D| < n`` forces both layers to meet ``D``, and then
    some ``x`` in ``D1`` has ``p(x)`` in ``D2``.

    All connected dominating sets of each prism are enumerated, which
    includes every minimum one of each variant.
    """
    sw = _Sweep("d1d2", seed)
    rng = random.Random(seed)
    for G in _universe(nmax, rng, exhaustive_max, samples):
        n = G.n
        low = (1 << n) - 1
        sw.count("graphs")
        for p in permutations_for(n, trials, rng):
            P = build_prism(G, p)
            bg = BitGraph(P.graph)
            sw.count("prisms")
            best = {v: None for v in GammaVariant if v is not GammaVariant.PLAIN}
            for D in _dominating_masks(bg):
                if not bg.is_connected_set(D):
                    continue
                sw.count("connected_dominating_sets")
                size = D.bit_count()
                for v, pred in ((GammaVariant.CONNECTED, None), (GammaVariant.WEAKLY_CONVEX, bg.is_weakly_convex),
                                (GammaVariant.CONVEX, bg.is_convex)):
                    if pred is None or pred(D):
                        if best[v] is None or size < best[v]:
                            best[v] = size
                D1, D2 = D & low, D >> n
                if size < n and (not D1 or not D2):
                    sw.fail(_describe(G, p, D=bits(D)) | {"part": 1, "revalidated":
                            geodesic.is_connected_dominating(P.graph, None, bits(D))})
                elif D1 and D2 and not any((D2 >> p.image[x]) & 1 for x in bits(D1)):
                    sw.fail(_describe(G, p, D=bits(D)) | {"part": 2, "revalidated":
                            geodesic.is_connected_dominating(P.graph, None, bits(D))})
                if sw.failed:
                    break
            for v, b in best.items():
                if b is not None and b < n:
                    sw.count(f"minimum_{v.value}_below_n")
            if sw.failed:
                break
        if sw.failed:
            break
    return sw.result(_universe_text(nmax, exhaustive_max, samples, f" x {trials} permutations each"))


def check_projection_lemmas(nmax: int = 7, trials: int = 3, seed: int = 0, exhaustive_max: int = EXHAUSTIVE_MAX,
                            samples: int = 20) -> CheckResult:
    """diam(G) <= 2: if ``p(D1)`` lies in ``D2`` then ``D2`` is a (weakly)
    convex dominating set of ``G`` whenever ``D`` is one of the prism;
    symmetrically for ``p^-1(D2)`` in ``D1``.  Every dominating ``D`` of
    each prism is examined."""
    sw = _Sweep("projection", seed)
    rng = random.Random(seed)
    necessity = 0
    for G in _universe(nmax, rng, exhaustive_max, samples):
        d = diameter(G)
        if d > 3:
            continue
        n = G.n
        low = (1 << n) - 1
        base = BitGraph(G)
        sw.count(f"graphs_diam_{d}")
        for p in permutations_for(n, trials, rng):
            P = build_prism(G, p)
            bg = BitGraph(P.graph)
            img = p.image
            inv = p.inverse().image
            for D in _dominating_masks(bg):
                D1, D2 = D & low, D >> n
                pD1 = sum(1 << img[x] for x in bits(D1))
                qD2 = sum(1 << inv[x] for x in bits(D2))
                cases = []
                if pD1 & ~D2 == 0:
                    cases.append(("D2", D2))
                if qD2 & ~D1 == 0:
                    cases.append(("D1", D1))
                if not cases:
                    continue
                for variant, pred, bpred in ((GammaVariant.WEAKLY_CONVEX, bg.is_weakly_convex, base.is_weakly_convex),
                                             (GammaVariant.CONVEX, bg.is_convex, base.is_convex)):
                    if not pred(D):
                        continue
                    for name, S in cases:
                        ok = base.dominates(S) and bpred(S)
                        if d <= 2:
                            sw.count(f"{variant.value}_instances")
                            if not ok:
                                ref = (geodesic.is_weakly_convex_dominating if variant is GammaVariant.WEAKLY_CONVEX
                                       else geodesic.is_convex_dominating)
                                sw.fail(_describe(G, p, D=bits(D), projected=bits(S)) | {
                                    "variant": variant.value, "projection": name,
                                    "revalidated": not ref(G, None, bits(S))})
                        elif not ok:
                            necessity += 1
            if sw.failed:
                break
        if sw.failed:
            break
    if necessity:
        sw.notes.append(f"{necessity} diameter-3 instances violate the conclusion: the diam <= 2 hypothesis is needed")
    sw.stats["diam3_necessity_witnesses"] = necessity
    return sw.result(_universe_text(nmax, exhaustive_max, samples,
                                    f" (diam<=2 asserted, diam 3 logged) x {trials} permutations each"))


# Identity prism ---------------------------------------------------------------------


def _inner_distances(bg: BitGraph, S: int, source: int) -> dict[int, int]:
    """BFS distances from ``source`` inside ``G[S]``."""
    dist = {source: 0}
    frontier = 1 << source
    reached = frontier
    k = 0
    while frontier:
        k += 1
        nb = 0
        for x in bits(frontier):
            nb |= bg.nbr[x]
        frontier = nb & S & ~reached
        reached |= frontier
        for x in bits(frontier):
            dist[x] = k
    return dist


def id_prism_split_condition(bg: BitGraph, S1: int, S2: int) -> bool:
    """Every ``u`` in ``S1`` and ``v`` in ``S2`` are joined by a shortest path of
    ``G`` that runs inside ``S1`` up to a vertex of ``S1 & S2`` and inside
    ``S2`` afterwards."""
    if not S1 or not S2:
        return True
    both = bits(S1 & S2)
    if not both:
        return False
    from_mid = {w: _inner_distances(bg, S2, w) for w in both}
    for u in bits(S1):
        du = _inner_distances(bg, S1, u)
        for v in bits(S2):
            target = bg.dist[u, v]
            if not any(w in du and v in from_mid[w] and du[w] + from_mid[w][v] == target for w in both):
                return False
    return True


def id_prism_weakly_convex_by_parts(bg: BitGraph, S1: int, S2: int) -> bool:
    """Weak convexity of ``S1 + S2'`` in the identity prism, read off ``G``."""
    return (bg.is_weakly_convex(S1) and bg.is_weakly_convex(S2) and bg.is_weakly_convex(S1 | S2)
            and id_prism_split_condition(bg, S1, S2))


def check_id_prism_lemmas(nmax: int = 7, trials: int = 0, seed: int = 0, exhaustive_max: int = EXHAUSTIVE_MAX,
                          samples: int = 10) -> CheckResult:
    """Identity prism: weakly convex / convex ``S`` give weakly convex /
    convex ``S``, ``S'`` and ``S + S'``; and weak convexity of any
    ``S1 + S2'`` is characterized through ``G``.  Exhaustive over subsets."""
    sw = _Sweep("id-prism-lemmas", seed)
    rng = random.Random(seed)
    for G in _universe(nmax, rng, exhaustive_max, samples):
        n = G.n
        low = (1 << n) - 1
        bg = BitGraph(G)
        ibg = BitGraph(identity_prism(G).graph)
        sw.count("graphs")
        for S in range(1, 1 << n):
            lifts = (S, S << n, S | (S << n))
            if bg.is_weakly_convex(S):
                sw.count("weakly_convex_sets")
                for T in lifts:
                    if not ibg.is_weakly_convex(T):
                        sw.fail(_describe(G, S=bits(S), lifted=bits(T)) | {"lemma": "weakly convex lift",
                                "revalidated": not geodesic.is_weakly_convex(identity_prism(G).graph, None, bits(T))})
            if bg.is_convex(S):
                sw.count("convex_sets")
                for T in lifts:
                    if not ibg.is_convex(T):
                        sw.fail(_describe(G, S=bits(S), lifted=bits(T)) | {"lemma": "convex lift",
                                "revalidated": not geodesic.is_convex(identity_prism(G).graph, None, bits(T))})
            if sw.failed:
                break
        for T in range(1, 1 << (2 * n)):
            S1, S2 = T & low, T >> n
            lhs = ibg.is_weakly_convex(T)
            rhs = id_prism_weakly_convex_by_parts(bg, S1, S2)
            sw.count("prism_subsets")
            if lhs != rhs:
                sw.fail(_describe(G, S1=bits(S1), S2=bits(S2)) | {"lemma": "characterization",
                        "weakly_convex_in_prism": lhs,
                        "revalidated": geodesic.is_weakly_convex(identity_prism(G).graph, None, bits(T)) == lhs})
                break
        if sw.failed:
            break
    return sw.result(_universe_text(nmax, exhaustive_max, samples, ", all vertex subsets"))


def check_tidg(nmax: int = 6, trials: int = 0, seed: int = 0) -> CheckResult:
    """``gamma_con(Id G) = min(2 gamma_con(G), n)``; fixers are exactly the
    graphs with ``gamma_con(G) = n`` and doublers those with ``gamma_con(G) <= n/2``."""
    sw = _Sweep("tidg", seed)
    for G in connected_graphs_upto(nmax, 2):
        n = G.n
        c = gamma_variant(G, GammaVariant.CONVEX).value
        r = gamma_variant(identity_prism(G).graph, GammaVariant.CONVEX)
        sw.count("graphs")
        sw.count("fixers", r.value == c)
        sw.count("doublers", r.value == 2 * c)
        fixer_ok = (r.value == c) == (c == n)
        doubler_ok = (r.value == 2 * c) == (2 * c <= n)
        if r.value != min(2 * c, n) or not fixer_ok or not doubler_ok:
            sw.fail(_describe(G, witness=r.witness) | {
                "gamma_con_G": c, "gamma_con_IdG": r.value,
                "revalidated": oracle_gamma_variant(identity_prism(G).graph, "convex").value == r.value})
            break
    return sw.result(f"all connected labeled graphs 2<=n<={nmax}")


def check_wcon_id_bound_and_partition(nmax: int = 7, trials: int = 0, seed: int = 0,
                                      exhaustive_max: int = EXHAUSTIVE_MAX, samples: int = 20,
                                      bound_nmax: int = 6, search_tries: int = 300) -> CheckResult:
    """Identity prism and weak convexity.

    * ``gamma_wcon(Id G) <= min(n, 2 gamma_wcon(G))`` on all connected graphs
      up to ``bound_nmax``;
    * partition characterization: for every ``D = S1 + S2'`` with both parts
      nonempty, ``D`` is weakly convex dominating exactly when
      ``A1 = S1 - S2, A2 = S1 & S2, A3 = S2 - S1`` satisfy the three
      partition conditions (so the achievable sizes ``|A| + |A2|`` agree);
    * the size ``gamma_wcon(G) + 1`` case against ``|A2| = 1`` partitions.
    """
    sw = _Sweep("wcon-id", seed)
    rng = random.Random(seed)
    bound_nmax = min(bound_nmax, nmax)
    for G in connected_graphs_upto(bound_nmax, 2):
        w = gamma_variant(G, GammaVariant.WEAKLY_CONVEX).value
        bound = min(G.n, 2 * w)
        r = gamma_variant(identity_prism(G).graph, GammaVariant.WEAKLY_CONVEX, limit=bound)
        sw.count("bound_graphs")
        if r.status == ABOVE_LIMIT:
            sw.fail(_describe(G) | {"part": "bound", "gamma_wcon_G": w,
                                    "revalidated": oracle_gamma_variant(identity_prism(G).graph, "wcon").value > bound})
            return sw.result(f"bound on all connected labeled graphs 2<=n<={bound_nmax}")
    literal_gaps = 0
    boundary = []
    for G in _universe(nmax, rng, exhaustive_max, samples):
        n = G.n
        low = (1 << n) - 1
        bg = BitGraph(G)
        ibg = BitGraph(identity_prism(G).graph)
        sw.count("partition_graphs")
        w = gamma_variant(G, GammaVariant.WEAKLY_CONVEX).value
        sizes_D: set[int] = set()
        sizes_P: set[int] = set()
        sizes_P_nonempty: set[int] = set()
        a2_one = False
        dominating = set(_dominating_masks(ibg))
        for T in range(1, 1 << (2 * n)):
            S1, S2 = T & low, T >> n
            if not S1 or not S2:
                continue
            A1, A2, A3 = S1 & ~S2, S1 & S2, S2 & ~S1
            lhs = T in dominating and ibg.is_weakly_convex(T)
            rhs = _partition_ok(bg, A1, A2, A3)
            size = T.bit_count()
            if lhs:
                sizes_D.add(size)
            if rhs:
                sizes_P.add(size)
                if A1 and A3:
                    sizes_P_nonempty.add(size)
                if A2.bit_count() == 1 and (A1 | A2 | A3).bit_count() == w:
                    a2_one = True
            if lhs != rhs:
                sw.fail(_describe(G, A1=bits(A1), A2=bits(A2), A3=bits(A3)) | {
                    "part": "partition", "prism_set_qualifies": lhs,
                    "revalidated": geodesic.is_weakly_convex_dominating(identity_prism(G).graph, None, bits(T)) == lhs})
                break
        if sw.failed:
            break
        literal_gaps += len(sizes_P - sizes_P_nonempty)
        wid = gamma_variant(identity_prism(G).graph, GammaVariant.WEAKLY_CONVEX).value
        if (wid == w + 1) != a2_one:
            # V and V' have n vertices and are not covered by the partition count
            if n <= w + 1:
                boundary.append(to_graph6(G).decode())
            else:
                sw.fail(_describe(G) | {"part": "A2=1 case", "gamma_wcon_G": w, "gamma_wcon_IdG": wid,
                                        "revalidated": oracle_gamma_variant(identity_prism(G).graph, "wcon").value == wid})
                break
        sw.count("a2_one_graphs", a2_one)
        sw.count("strictly_below_bound", wid < min(n, 2 * w))
    sw.stats["sizes_only_with_empty_outer_part"] = literal_gaps
    hit = find_a2_one_instance(4, nmax, search_tries, seed) if search_tries else None
    sw.stats["a2_one_strict_instance"] = hit
    if search_tries and hit is None:
        sw.notes.append(f"no graph with n <= {nmax} found ({search_tries} random graphs per order) where a |A2| = 1 "
                        "partition with A1, A3 nonempty gives gamma_wcon(Id G) = gamma_wcon(G) + 1 "
                        "< min(n, 2 gamma_wcon(G))")
    if literal_gaps:
        sw.notes.append(f"{literal_gaps} (graph, size) pairs are realized only by partitions with A1 or A3 empty; "
                        "requiring all three parts nonempty would break the equivalence")
    if boundary:
        sw.stats["boundary_graphs"] = len(boundary)
        sw.notes.append(f"{len(boundary)} graphs with n <= gamma_wcon(G) + 1 where V or V' decides whether "
                        f"gamma_wcon(Id G) = gamma_wcon(G) + 1, against the |A2| = 1 test; e.g. graph6 {boundary[0]}")
    return sw.result(f"bound on all connected labeled graphs 2<=n<={bound_nmax}; partitions on "
                     + _universe_text(nmax, exhaustive_max, samples))


def _partition_ok(bg: BitGraph, A1: int, A2: int, A3: int) -> bool:
    S1, S2 = A1 | A2, A2 | A3
    full = bg.full
    if bg.cover(S1) | A3 != full or bg.cover(S2) | A1 != full:
        return False
    return (bg.is_weakly_convex(S1) and bg.is_weakly_convex(S2) and bg.is_weakly_convex(S1 | S2)
            and id_prism_split_condition(bg, S1, S2))


def find_a2_one_instance(nmin: int = 4, nmax: int = 7, tries: int = 4000, seed: int = 0,
                         require_outer_parts: bool = True) -> dict | None:
    """Search for ``G`` whose weakly convex domination number grows by exactly
    one in the identity prism, realized by a partition with ``|A2| = 1`` (and,
    by default, ``A1`` and ``A3`` nonempty), strictly below ``min(n, 2 gamma_wcon)``.
    """
    rng = random.Random(seed)
    for n in range(nmin, nmax + 1):
        for _ in range(tries):
            G = random_connected_graph(n, rng)
            w = gamma_variant(G, GammaVariant.WEAKLY_CONVEX).value
            if w + 1 >= min(n, 2 * w):
                continue
            bg = BitGraph(G)
            for A in all_optimal_sets(G, GammaVariant.WEAKLY_CONVEX, w):
                for mid in A:
                    rest = [x for x in A if x != mid]
                    for colors in itertools.product((0, 1), repeat=len(rest)):
                        A1 = to_mask(x for x, c in zip(rest, colors) if c == 0)
                        A3 = to_mask(x for x, c in zip(rest, colors) if c == 1)
                        if require_outer_parts and (not A1 or not A3):
                            continue
                        if _partition_ok(bg, A1, 1 << mid, A3):
                            r = gamma_variant(identity_prism(G).graph, GammaVariant.WEAKLY_CONVEX)
                            if r.value == w + 1:
                                return _describe(G, A1=bits(A1), A2=[mid], A3=bits(A3)) | {
                                    "gamma_wcon_G": w, "gamma_wcon_IdG": r.value, "witness": list(r.witness)}
    return None


# When gamma_c(prism) = gamma(G) + 1 -------------------------------------------------


def _subsets_upto(N: int, k: int) -> list[np.ndarray]:
    """Index arrays (by size) of all subsets of ``range(N)`` with 1..k members."""
    return [np.array(list(itertools.combinations(range(N), s)), dtype=np.int64) for s in range(1, k + 1)]


def prism_connected_domination_upto(G: Graph, perms: list[Permutation], k: int) -> list[int | None]:
    """For each permutation, the least size ``<= k`` of a connected dominating
    set of the prism, or None.  Plain brute force over all small subsets."""
    n = G.n
    N = 2 * n
    nbrG = [to_mask(a) for a in G.adjacency]
    out: list[int | None] = []
    closed = np.zeros((len(perms), N), dtype=np.int64)
    nbrs = []
    for i, p in enumerate(perms):
        inv = p.inverse().image
        row = [nbrG[v] | (1 << (n + p.image[v])) for v in range(n)]
        row += [(nbrG[v] << n) | (1 << inv[v]) for v in range(n)]
        nbrs.append(row)
        closed[i] = [m | (1 << x) for x, m in enumerate(row)]
    full = (1 << N) - 1
    best: list[int | None] = [None] * len(perms)
    for combos in _subsets_upto(N, min(k, N)):
        size = combos.shape[1]
        cov = np.bitwise_or.reduce(closed[:, combos], axis=2)
        for i, j in zip(*np.nonzero(cov == full)):
            if best[i] is not None:
                continue
            S = 0
            for x in combos[j]:
                S |= 1 << int(x)
            if _mask_connected(nbrs[i], S):
                best[i] = size
        if all(b is not None for b in best):
            break
    out.extend(best)
    return out


def _mask_connected(nbr: list[int], S: int) -> bool:
    reached = frontier = S & -S
    while frontier:
        nb = 0
        for x in bits(frontier):
            nb |= nbr[x]
        frontier = nb & S & ~reached
        reached |= frontier
    return reached == S


def check_plus_one_certificate(nmax: int = 6, trials: int = 50, seed: int = 0, exhaustive_max: int = 6,
                samples: int = 0) -> CheckResult:
    """``gamma_c(prism) = gamma(G) + 1`` exactly when a certificate
    (minimum dominating set split ``A1, A2`` and ``v``) exists.

    Asserted on graphs with ``gamma_con(G) != n``; the other graphs are
    swept too and reported in ``stats``.
    """
    sw = _Sweep("plus-one", seed)
    rng = random.Random(seed)
    for G in _universe(nmax, rng, exhaustive_max, samples):
        n = G.n
        hyp = gamma_variant(G, GammaVariant.CONVEX).value != n
        g_sets = all_optimal_sets(G, GammaVariant.PLAIN)
        g = len(g_sets[0])
        search = PlusOneSearch(G, g_sets)
        perms = permutations_for(n, trials, rng)
        sizes = prism_connected_domination_upto(G, perms, g + 1)
        tag = "hypothesis" if hyp else "outside_hypothesis"
        sw.count(f"{tag}_graphs")
        for p, size in zip(perms, sizes):
            cert = search.certificate(p)
            rhs = size == g + 1
            sw.count(f"{tag}_prisms")
            sw.count(f"{tag}_certified", cert is not None)
            if size is not None and size <= g:
                sw.fail(_describe(G, p) | {"reason": "connected dominating set below gamma(G)+1", "size": size,
                                           "revalidated": gamma_variant(build_prism(G, p).graph, "connected").value <= g})
                break
            if cert is not None:
                P = build_prism(G, p)
                if not (geodesic.is_connected_dominating(P.graph, None, cert.prism_set)
                        and len(cert.prism_set) == g + 1):
                    sw.fail(_describe(G, p, D=cert.prism_set) | {"reason": "certificate set is not a connected "
                                                                  "dominating set of size gamma+1", "revalidated": True})
                    break
            if (cert is not None) != rhs:
                if hyp:
                    r = gamma_variant(build_prism(G, p).graph, GammaVariant.CONNECTED)
                    sw.fail(_describe(G, p, witness=r.witness) | {
                        "gamma_G": g, "gamma_c_prism": r.value, "certificate": cert is not None,
                        "revalidated": (r.value == g + 1) == rhs})
                    break
                sw.count("outside_hypothesis_mismatches")
        if sw.failed:
            break
    if "outside_hypothesis_prisms" in sw.stats:
        mism = sw.stats.get("outside_hypothesis_mismatches", 0)
        sw.notes.append(f"graphs with gamma_con(G) = n: equivalence "
                        f"{'also holds' if mism == 0 else f'fails on {mism} prisms'} there")
    return sw.result(_universe_text(nmax, exhaustive_max, samples, f" x {trials} permutations each "
                                    "(all permutations when fewer)"))


def check_partition_builder(nmax: int = 5, trials: int = 3, seed: int = 0, exhaustive_max: int = EXHAUSTIVE_MAX,
                       samples: int = 10, partitions: int = 20) -> CheckResult:
    """Sets built from valid partitions ``A1, A2, A3`` are connected dominating
    sets of the prism of size ``|A| + |A2|``."""
    sw = _Sweep("partition-builder", seed)
    rng = random.Random(seed)
    for G in _universe(nmax, rng, exhaustive_max, samples):
        n = G.n
        doms = [tuple(bits(m)) for m in _dominating_masks(BitGraph(G))]
        sw.count("graphs")
        for p in permutations_for(n, trials, rng):
            P = build_prism(G, p)
            for _ in range(partitions):
                A = rng.choice(doms)
                colors = [rng.randrange(3) for _ in A]
                parts = [frozenset(x for x, c in zip(A, colors) if c == k) for k in range(3)]
                try:
                    D = build_connected_dom_from_partition(G, p, *parts)
                except PartitionError as exc:
                    sw.count(f"rejected_condition_{exc.condition}")
                    if exc.condition == "A2" and _empty_a2_breaks(G, p, parts[0], parts[2]):
                        sw.count("empty_A2_witnesses")
                    continue
                sw.count("built")
                if not (geodesic.is_connected_dominating(P.graph, None, D) and len(D) == len(A) + len(parts[1])):
                    sw.fail(_describe(G, p, A1=parts[0], A2=parts[1], A3=parts[2], D=D) | {"revalidated": True})
                    break
            if sw.failed:
                break
        if sw.failed:
            break
    if sw.stats.get("empty_A2_witnesses"):
        sw.notes.append("partitions with A2 empty can meet conditions 1-4 and still give a disconnected set: "
                        "A2 must be nonempty")
    return sw.result(_universe_text(nmax, exhaustive_max, samples, f" x {trials} permutations x {partitions} "
                                    "random partitions"))


def _empty_a2_breaks(G: Graph, p: Permutation, A1: Iterable[int], A3: Iterable[int]) -> bool:
    """Conditions 1-4 hold with ``A2`` empty, yet ``A1 + p(A3)'`` is not connected."""
    bg = BitGraph(G)
    a1, a3 = to_mask(A1), to_mask(A3)
    t, pa1 = to_mask(p.apply(A3)), to_mask(p.apply(A1))
    full = bg.full
    if not (a1 and t and bg.dominates(a1 | a3) and bg.cover(a1) | a3 == full and bg.cover(t) | pa1 == full
            and bg.is_connected_set(a1) and bg.is_connected_set(t)):
        return False
    P = build_prism(G, p)
    return not geodesic.is_connected_set(P.graph, set(bits(a1)) | {G.n + x for x in bits(t)})


CHECKS: dict[str, Callable[..., CheckResult]] = {
    "lemma-plus1": check_lemma_plus1,
    "sandwich": check_domination_sandwich,
    "diam-v-sets": check_diam_V_sets,
    "d1d2": check_D1D2_structure,
    "projection": check_projection_lemmas,
    "id-prism-lemmas": check_id_prism_lemmas,
    "tidg": check_tidg,
    "wcon-id": check_wcon_id_bound_and_partition,
    "plus-one": check_plus_one_certificate,
    "partition-builder": check_partition_builder,
}


def run_check(check_id: str, nmax: int | None = None, seed: int = 0, trials: int | None = None) -> CheckResult:
    try:
        fn = CHECKS[check_id]
    except KeyError:
        raise ValueError(f"unknown check {check_id!r}; choose from {', '.join(CHECKS)}") from None
    kwargs: dict = {"seed": seed}
    if nmax is not None:
        kwargs["nmax"] = nmax
    if trials is not None:
        kwargs["trials"] = trials
    return fn(**kwargs)


# Table of the small counterexamples ---------------------------------------------------

PASS, FAIL, INCONCLUSIVE = "PASS", "FAIL", "INCONCLUSIVE"


@dataclass
class TableRow:
    graph: str
    quantity: str
    expected: int | str
    computed: int | None
    status: str
    witness: tuple[str, ...] = ()
    note: str = ""
    elapsed: float = 0.0

    def to_dict(self) -> dict:
        return {"graph": self.graph, "quantity": self.quantity, "expected": self.expected,
                "computed": self.computed, "status": self.status, "witness": list(self.witness),
                "note": self.note, "elapsed_ms": round(self.elapsed * 1000, 1)}


def _prism_labels(fam, P) -> list[str]:
    return [format_label(x) for x in P.labels(fam.labels)]


def _value_row(fam, variant: GammaVariant, expected: int, budget_ms: int | None, prism: bool = False,
               compare: str = "==") -> TableRow:
    if prism:
        P = build_prism(fam.graph, fam.canonical_perm)
        graph, labels = P.graph, _prism_labels(fam, P)
        quantity = f"gamma_{variant.short}(prism)"
    else:
        graph, labels = fam.graph, fam.label_strings()
        quantity = f"gamma_{variant.short}(G)"
    r = gamma_variant(graph, variant, budget_ms=budget_ms)
    witness = tuple(labels[i] for i in r.witness)
    if r.status != OPTIMAL:
        note = f"budget exhausted; lower bound {r.lower_bound}"
        return TableRow(fam.name, quantity, expected, None, INCONCLUSIVE, witness, note, r.elapsed)
    ok = r.value == expected if compare == "==" else r.value <= expected
    valid = holds_reference(graph, variant, r.witness)
    status = PASS if ok and valid else FAIL
    return TableRow(fam.name, quantity, expected if compare == "==" else f"<= {expected}", r.value, status,
                    witness, "" if valid else "witness rejected by reference predicate", r.elapsed)


def holds_reference(G: Graph, variant: GammaVariant | str, S: Iterable[int]) -> bool:
    """Check ``S`` with the reference predicates of :mod:`prismdom.geodesic`."""
    variant = GammaVariant.parse(variant)
    S = frozenset(S)
    if variant is GammaVariant.PLAIN:
        return is_dominating(G, S)
    fn = {GammaVariant.CONNECTED: geodesic.is_connected_dominating,
          GammaVariant.WEAKLY_CONVEX: geodesic.is_weakly_convex_dominating,
          GammaVariant.CONVEX: geodesic.is_convex_dominating}[variant]
    return fn(G, None, S)


def _witness_row(fam, variant: GammaVariant, labels: list) -> TableRow:
    """A listed set in the prism checked with the reference predicates."""
    P = build_prism(fam.graph, fam.canonical_perm)
    names = _prism_labels(fam, P)
    index = {s: i for i, s in enumerate(names)}
    S = frozenset(index[x] for x in labels)
    t0 = time.perf_counter()
    ok = holds_reference(P.graph, variant, S)
    return TableRow(fam.name, f"listed {variant.short} dominating set in prism", len(labels), len(S),
                    PASS if ok else FAIL, tuple(names[i] for i in sorted(S)), elapsed=time.perf_counter() - t0)


def counterexample_table(budget_ms: int | None = 600_000, max_k: int = 2) -> list[TableRow]:
    """Every small counterexample to the naive prism bounds, recomputed.

    ``max_k`` caps the gadget parameter of the hub families; the spider
    trees use ``(2,1), (2,2), (3,1), (2,3)`` and the seven-path gadgets
    ``k = 3, 4, 5``.
    """
    C, W = GammaVariant.CONVEX, GammaVariant.WEAKLY_CONVEX
    rows: list[TableRow] = []
    p3 = fm.path(3)
    rows += [_value_row(p3, C, 1, budget_ms), _value_row(p3, W, 1, budget_ms),
             _value_row(p3, C, 3, budget_ms, prism=True), _value_row(p3, W, 3, budget_ms, prism=True)]
    for k in range(2, 6):
        st = fm.star(k)
        rows += [_value_row(st, C, 1, budget_ms), _value_row(st, W, 1, budget_ms),
                 _value_row(st, C, 4, budget_ms, prism=True), _value_row(st, W, 3, budget_ms, prism=True)]
    c7 = fm.cycle(7)
    rows += [_value_row(c7, W, 7, budget_ms), _value_row(c7, W, 6, budget_ms, prism=True),
             _witness_row(c7, W, ["0", "0" + PRIME, "1", "1" + PRIME, "6", "6" + PRIME])]
    for k in range(1, max_k + 1):
        g = fm.cycle_gadget(k)
        listed = ["(0,0)", "(0,0)" + PRIME] + [f"({i},{j}){q}" for i in range(1, k + 1) for j in (1, 6)
                                               for q in ("", PRIME)]
        rows += [_value_row(g, W, 6 * k + 1, budget_ms), _value_row(g, W, 4 * k + 2, budget_ms, prism=True),
                 _witness_row(g, W, listed)]
    p6 = fm.path(6)
    rows += [_value_row(p6, W, 4, budget_ms), _value_row(p6, W, 12, budget_ms, prism=True)]
    for k in range(1, max_k + 1):
        h = fm.path_gadget(k)
        rows += [_value_row(h, W, 4 * k + 1, budget_ms), _value_row(h, W, 10 * k + 2, budget_ms, prism=True)]
    for k, l in ((2, 1), (2, 2), (3, 1), (2, 3)):
        t = fm.spider_tree(k, l)
        rows += [_value_row(t, C, k + 1, budget_ms), _value_row(t, C, 2 * k * l + 2 * k + 2, budget_ms, prism=True)]
    for k in (3, 4, 5):
        g = fm.sept_path_gadget(k)
        listed = [f"{x}{q}" for x in ("2", "(3,1)", "(4,1)", "(5,1)", "6") for q in ("", PRIME)]
        rows += [_value_row(g, C, 3 * k + 2, budget_ms), _witness_row(g, C, listed),
                 _value_row(g, C, 10, budget_ms, prism=True)]
    for fam in (fm.cycle(7), fm.path(6), fm.cycle_gadget(1)):
        w = gamma_variant(fam.graph, W).value
        idfam = fm.LabeledGraph(fam.graph, fam.labels, Permutation.identity(fam.graph.n), "Id " + fam.name)
        rows.append(_value_row(idfam, W, min(fam.graph.n, 2 * w), budget_ms, prism=True, compare="<="))
        c = gamma_variant(fam.graph, C).value
        rows.append(_value_row(idfam, C, min(fam.graph.n, 2 * c), budget_ms, prism=True))
    return rows


def format_table(rows: list[TableRow]) -> str:
    head = ("graph", "quantity", "expected", "computed", "status", "ms")
    body = [(r.graph, r.quantity, str(r.expected), "-" if r.computed is None else str(r.computed), r.status,
             f"{r.elapsed * 1000:.0f}") for r in rows]
    widths = [max(len(x[i]) for x in [head, *body]) for i in range(len(head))]
    lines = ["  ".join(c.ljust(w) for c, w in zip(line, widths)).rstrip() for line in [head, *body]]
    lines.insert(1, "  ".join("-" * w for w in widths))
    return "\n".join(lines)


# Weakly convex domination fixers -------------------------------------------------------


@dataclass
class ConjectureReport:
    n: int
    seed: int
    graphs_examined: int
    candidates: int
    prisms_examined: int
    complete: bool
    timed_out: bool = False
    hits: list[dict] = field(default_factory=list)
    elapsed: float = 0.0

    def to_json(self) -> str:
        return json.dumps({"n": self.n, "seed": self.seed, "graphs_examined": self.graphs_examined,
                           "candidates": self.candidates, "prisms_examined": self.prisms_examined,
                           "complete": self.complete, "timed_out": self.timed_out, "hits": self.hits,
                           "elapsed_ms": round(self.elapsed * 1000, 1)}, sort_keys=True)


def _graphs_of_order(n: int, rng: random.Random, samples: int) -> tuple[Iterator[Graph], bool]:
    """Non-isomorphic connected graphs of order ``n`` when the atlas covers it, else samples."""
    if n <= 7:
        def atlas() -> Iterator[Graph]:
            for H in nx.graph_atlas_g():
                if H.number_of_nodes() == n and (n == 0 or nx.is_connected(H)):
                    yield new_graph(n, H.edges())
        return atlas(), True
    return random_connected_graphs(samples, n, n, rng), False


def search_wcon_fixer_conjecture(n: int, budget_ms: int | None = 60_000, seed: int = 0, trials: int = 200,
                                 samples: int = 2000) -> ConjectureReport:
    """Look for a diameter-2 graph with ``gamma_wcon(G) = n`` and a permutation
    making the prism's weakly convex domination number drop below ``n``.

    Permutations are exhaustive when ``n! <= trials`` and sampled otherwise.
    Every hit is confirmed by the subset oracle when the prism is small enough.
    """
    if n > 10:
        raise ValueError("search is limited to n <= 10")
    t0 = time.perf_counter()
    deadline = None if budget_ms is None else t0 + budget_ms / 1000
    rng = random.Random(seed)
    graphs, complete = _graphs_of_order(n, rng, samples)
    report = ConjectureReport(n, seed, 0, 0, 0, complete)
    for G in graphs:
        if deadline is not None and time.perf_counter() > deadline:
            report.complete, report.timed_out = False, True
            break
        report.graphs_examined += 1
        if G.n < 2 or diameter(G) != 2:
            continue
        if gamma_variant(G, GammaVariant.WEAKLY_CONVEX).value != n:
            continue
        report.candidates += 1
        perms = permutations_for(n, trials, rng)
        if math.factorial(n) > trials:
            report.complete = False
        for p in perms:
            if deadline is not None and time.perf_counter() > deadline:
                report.complete, report.timed_out = False, True
                break
            report.prisms_examined += 1
            P = build_prism(G, p)
            remaining = None if deadline is None else max(1, int((deadline - time.perf_counter()) * 1000))
            r = gamma_variant(P.graph, GammaVariant.WEAKLY_CONVEX, budget_ms=remaining, limit=n - 1)
            if r.status == OPTIMAL:
                confirmed = holds_reference(P.graph, GammaVariant.WEAKLY_CONVEX, r.witness)
                if 2 * n <= 16:
                    confirmed = confirmed and oracle_gamma_variant(P.graph, "wcon").value < n
                report.hits.append(_describe(G, p, witness=r.witness) | {"gamma_wcon_prism": r.value,
                                                                         "revalidated": confirmed})
            elif r.status != ABOVE_LIMIT:
                report.complete, report.timed_out = False, True
    report.elapsed = time.perf_counter() - t0
    return report

