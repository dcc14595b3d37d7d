from __future__ import annotations

import random

import pytest

from prismdom.graph_core import GraphError, new_graph
from prismdom.prism import (
    Permutation,
    PermutationError,
    build_prism,
    format_label,
    identity_prism,
    invert,
    lift_set,
    parse_label,
    parse_permutation,
)


def test_cycle_notation_round_trip():
    p = parse_permutation(7, "(1 3)(4 6)")
    assert p.image == (0, 3, 2, 1, 6, 5, 4)
    assert p.cycles() == [(1, 3), (4, 6)]
    assert parse_permutation(7, p.to_cycle_string()) == p
    assert parse_permutation(3, "()").is_identity()
    assert parse_permutation(3, "").is_identity()


def test_labels_with_tuples():
    labels = [1, 2, (3, 1), (4, 1), (5, 1), 6, 7]
    index = {lab: i for i, lab in enumerate(labels)}
    p = parse_permutation(7, "(2 6 (5,1) (3,1))", index)
    assert p(index[2]) == index[6]
    assert p(index[(3, 1)]) == index[2]
    assert p.to_cycle_string(labels) == "(2 6 (5,1) (3,1))"
    assert parse_label("(5,1)") == (5, 1) and format_label((5, 1)) == "(5,1)"


@pytest.mark.parametrize("text", ["(0 0)", "(0 1)(1 2)", "(0 9)", "(0 1", "(a b)"])
def test_malformed_permutations(text):
    with pytest.raises(PermutationError):
        parse_permutation(3, text)


def test_group_operations():
    rng = random.Random(5)
    for _ in range(20):
        p, q = Permutation.random(6, rng), Permutation.random(6, rng)
        assert p.compose(invert(p)).is_identity()
        assert all(p.compose(q)(v) == p(q(v)) for v in range(6))
    with pytest.raises(PermutationError):
        Permutation((0, 0, 1))


def test_prism_structure(p3):
    P = build_prism(p3, parse_permutation(3, "(0 1)"))
    assert P.graph.n == 6 and P.graph.m == 7
    assert P.graph.has_edge(0, 4) and P.graph.has_edge(1, 3) and P.graph.has_edge(2, 5)
    assert P.split({0, 4, 5}) == ({0}, {1, 2})
    assert lift_set(P, [0], [1, 2]) == {0, 4, 5}
    assert P.labels() == ["0", "1", "2", "0'", "1'", "2'"]
    I = identity_prism(p3)
    assert all(I.graph.has_edge(v, v + 3) for v in range(3))
    with pytest.raises(GraphError):
        build_prism(p3, Permutation.identity(4))


def test_prism_is_cubic_for_cycles():
    C = new_graph(5, [(i, (i + 1) % 5) for i in range(5)])
    P = build_prism(C, parse_permutation(5, "(0 2 4 1 3)"))
    assert set(P.graph.degrees()) == {3}
