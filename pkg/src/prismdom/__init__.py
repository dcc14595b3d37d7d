"""Exact domination invariants of graph prisms.

A prism of ``G`` under a permutation ``p`` joins two copies of ``G`` by the
matching ``v -> p(v)'``.  The package computes the domination number and
its connected, weakly convex and convex variants exactly, with witnesses,
and checks structural statements about prisms over exhaustive and random
graph universes.
"""

from __future__ import annotations

from .families import LabeledGraph, make_family
from .formats import FormatError, format_edge_list, from_graph6, parse_edge_list, to_graph6
from .geodesic import enumerate_geodesics, interval, is_convex, is_weakly_convex
from .graph_core import Graph, GraphError, all_pairs_distances, diameter, is_connected, new_graph
from .prism import Permutation, PrismGraph, build_prism, identity_prism, parse_permutation
from .solver import (
    GammaReport,
    GammaVariant,
    build_connected_dom_from_partition,
    gamma,
    gamma_variant,
    min_connected_dominating_plus_one_certificate,
    oracle_gamma_variant,
)

__all__ = [
    "FormatError",
    "GammaReport",
    "GammaVariant",
    "Graph",
    "GraphError",
    "LabeledGraph",
    "Permutation",
    "PrismGraph",
    "all_pairs_distances",
    "build_connected_dom_from_partition",
    "build_prism",
    "diameter",
    "enumerate_geodesics",
    "format_edge_list",
    "from_graph6",
    "gamma",
    "gamma_variant",
    "identity_prism",
    "interval",
    "is_connected",
    "is_convex",
    "is_weakly_convex",
    "make_family",
    "min_connected_dominating_plus_one_certificate",
    "new_graph",
    "oracle_gamma_variant",
    "parse_edge_list",
    "parse_permutation",
    "to_graph6",
]
