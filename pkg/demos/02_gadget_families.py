"""Gadget families: the gap between a graph and its prism grows without bound.

Run: python demos/02_gadget_families.py
"""

from __future__ import annotations

import time

from prismdom import build_prism, gamma_variant
from prismdom.families import cycle_gadget, path_gadget, sept_path_gadget, spider_tree


def row(fam, variant: str) -> str:
    t0 = time.perf_counter()
    base = gamma_variant(fam.graph, variant).value
    prism = gamma_variant(build_prism(fam.graph, fam.canonical_perm).graph, variant).value
    return f"{fam.name:22s} n={fam.graph.n:3d}  gamma_{variant}: G {base:3d}  prism {prism:3d}  " \
           f"({time.perf_counter() - t0:.2f}s)"


# %% Seven-cycles glued at a hub: weakly convex domination drops in the prism.
for k in (1, 2):
    print(row(cycle_gadget(k), "wcon"))

# %% Six-paths glued at an end: weakly convex domination more than doubles.
for k in (1, 2):
    print(row(path_gadget(k), "wcon"))

# %% Spider trees: convex domination of the prism grows with the leaves, the base stays at k+1.
for k, l in ((2, 1), (2, 2), (2, 3), (3, 1)):
    print(row(spider_tree(k, l), "con"))

# %% Seven-paths sharing their ends: the prism stays at 10 while the base grows as 3k+2.
for k in (3, 4, 5):
    print(row(sept_path_gadget(k), "con"))
