"""Search for diameter-2 graphs whose weakly convex domination number is n
and a permutation that lowers it in the prism.

Run: python demos/05_fixer_search.py [nmax] [budget_ms]
"""

from __future__ import annotations

import sys

from prismdom.verify import search_wcon_fixer_conjecture

nmax = int(sys.argv[1]) if len(sys.argv) > 1 else 6
budget = int(sys.argv[2]) if len(sys.argv) > 2 else 60_000

# %% Orders up to 7 come from the atlas of non-isomorphic graphs; permutations
# are exhaustive while n! stays within the trial count.
for n in range(3, nmax + 1):
    r = search_wcon_fixer_conjecture(n, budget_ms=budget)
    print(f"n={n}: {r.graphs_examined} graphs, {r.candidates} candidates, {r.prisms_examined} prisms, "
          f"complete={r.complete}, hits={len(r.hits)}, {r.elapsed:.1f}s")
    for hit in r.hits[:3]:
        print("   ", hit)
