from __future__ import annotations

import random

import pytest

from prismdom.geodesic import is_connected_dominating, is_weakly_convex_dominating
from prismdom.graph_core import GraphError, new_graph
from prismdom.prism import Permutation, build_prism, parse_permutation
from prismdom.solver import (
    ABOVE_LIMIT,
    INCONCLUSIVE,
    OPTIMAL,
    GammaVariant,
    PartitionError,
    all_optimal_sets,
    build_connected_dom_from_partition,
    gamma,
    gamma_variant,
    holds,
    min_connected_dominating_plus_one_certificate,
    oracle_gamma_variant,
)
from prismdom.universes import connected_graphs, random_connected_graph


def test_variant_names():
    assert GammaVariant.parse("dom") is GammaVariant.PLAIN
    assert GammaVariant.parse("wcon") is GammaVariant.WEAKLY_CONVEX
    assert GammaVariant.parse("con") is GammaVariant.CONVEX
    with pytest.raises(ValueError):
        GammaVariant.parse("nope")


def test_small_values(p3, c7):
    assert gamma(p3).value == 1 and gamma(p3).witness == (1,)
    assert gamma(c7).value == 3
    assert gamma_variant(c7, "connected").value == 5
    assert gamma_variant(c7, "wcon").value == 7
    assert gamma_variant(c7, "con").value == 7
    K = new_graph(5, [(i, j) for i in range(5) for j in range(i + 1, 5)])
    assert [gamma_variant(K, v).value for v in GammaVariant] == [1, 1, 1, 1]


def test_witness_is_lexicographically_least(c7):
    r = gamma(c7)
    assert r.witness == min(all_optimal_sets(c7, "plain"))
    P = build_prism(c7, parse_permutation(7, "(1 3)(4 6)"))
    r = gamma_variant(P.graph, "wcon")
    assert r.value == 6
    assert r.witness == min(all_optimal_sets(P.graph, "wcon", 6))


@pytest.mark.parametrize("variant", list(GammaVariant))
def test_matches_oracle_on_n5(variant):
    for G in connected_graphs(5):
        a, b = gamma_variant(G, variant), oracle_gamma_variant(G, variant)
        assert (a.value, a.witness) == (b.value, b.witness)


@pytest.mark.parametrize("variant", list(GammaVariant))
def test_matches_oracle_on_random_graphs(variant):
    rng = random.Random(11)
    for _ in range(40):
        G = random_connected_graph(rng.randint(6, 11), rng, p=rng.choice([0.25, 0.4, 0.6]))
        a, b = gamma_variant(G, variant), oracle_gamma_variant(G, variant)
        assert (a.value, a.witness) == (b.value, b.witness)


def test_workers_give_identical_results():
    rng = random.Random(2)
    G = random_connected_graph(12, rng, p=0.3)
    for variant in ("connected", "wcon", "con"):
        one, two = gamma_variant(G, variant), gamma_variant(G, variant, workers=2)
        assert (one.value, one.witness, one.status) == (two.value, two.witness, two.status)


def test_budget_and_limit(c7):
    r = gamma_variant(c7, "wcon", budget_ms=0)
    assert r.status == INCONCLUSIVE and r.value is None and not r.optimal
    r = gamma_variant(c7, "wcon", limit=6)
    assert r.status == ABOVE_LIMIT and r.value is None
    assert gamma_variant(c7, "wcon", limit=7).status == OPTIMAL
    assert gamma(c7, budget_ms=0).status == INCONCLUSIVE


def test_rejects_disconnected_and_oversized():
    G = new_graph(4, [(0, 1), (2, 3)])
    assert gamma(G).value == 2
    with pytest.raises(GraphError):
        gamma_variant(G, "connected")
    with pytest.raises(GraphError):
        oracle_gamma_variant(new_graph(17, [(i, i + 1) for i in range(16)]), "plain")


def test_report_json(p3):
    text = gamma_variant(p3, "con").to_json(["a", "b", "c"])
    assert '"witness_labels": ["b"]' in text and '"status": "optimal"' in text


def test_holds(c7):
    assert holds(c7, "wcon", range(7))
    assert not holds(c7, "wcon", [0, 1, 2, 3, 4])
    assert holds(c7, "connected", [0, 1, 2, 3, 4])


def test_plus_one_certificate(p3, c7):
    p = Permutation.identity(3)
    cert = min_connected_dominating_plus_one_certificate(p3, p)
    assert cert is not None and cert.v in cert.A1
    assert len(cert.prism_set) == 2
    assert is_connected_dominating(build_prism(p3, p).graph, None, cert.prism_set)
    q = parse_permutation(7, "(1 3)(4 6)")
    assert min_connected_dominating_plus_one_certificate(c7, q) is None
    assert gamma_variant(build_prism(c7, q).graph, "connected").value == 6


def test_partition_builder(c7):
    p = Permutation.identity(7)
    D = build_connected_dom_from_partition(c7, p, {0, 1, 2}, {3}, {4, 5})
    P = build_prism(c7, p)
    assert len(D) == 7 and is_connected_dominating(P.graph, None, D)
    with pytest.raises(PartitionError) as exc:
        build_connected_dom_from_partition(c7, p, {0, 1, 2, 3}, set(), {4, 5})
    assert exc.value.condition == "A2"
    with pytest.raises(PartitionError) as exc:
        build_connected_dom_from_partition(c7, p, {0}, {3}, {5})
    assert exc.value.condition == "2"
    with pytest.raises(PartitionError) as exc:
        build_connected_dom_from_partition(c7, p, {0, 1}, {2}, {5})
    assert exc.value.condition == "1"
    with pytest.raises(PartitionError):
        build_connected_dom_from_partition(c7, p, {0, 1}, {1}, {4})


def test_prism_of_c7_witness(c7):
    P = build_prism(c7, parse_permutation(7, "(1 3)(4 6)"))
    assert is_weakly_convex_dominating(P.graph, None, {0, 1, 6, 7, 8, 13})
