"""Identity prisms (G times an edge).

Convex domination is exactly min(2 gamma_con, n); weakly convex domination
obeys the same upper bound but can fall strictly below it.

Run: python demos/03_identity_prisms.py
"""

from __future__ import annotations

from collections import Counter

from prismdom import gamma_variant, identity_prism
from prismdom.universes import connected_graphs

# %% Convex: the formula holds on every connected labeled graph with five vertices.
tally = Counter()
for G in connected_graphs(5):
    c = gamma_variant(G, "con").value
    ci = gamma_variant(identity_prism(G).graph, "con").value
    tally["fixer" if ci == c else "doubler" if ci == 2 * c else "capped at n"] += 1
    assert ci == min(2 * c, G.n)
print("n=5 convex:", dict(tally))

# %% Weakly convex: count graphs strictly below min(n, 2 gamma_wcon) and show one.
gaps = Counter()
example = None
for G in connected_graphs(6):
    w = gamma_variant(G, "wcon").value
    bound = min(G.n, 2 * w)
    wi = gamma_variant(identity_prism(G).graph, "wcon", limit=bound - 1)
    if wi.value is not None:
        gaps[bound - wi.value] += 1
        example = example or (G.sorted_edges(), w, wi.value, wi.witness)
print("n=6 weakly convex, graphs by gap below the bound:", dict(gaps))
print("example (edges, gamma_wcon(G), gamma_wcon(Id G), witness):", example)
