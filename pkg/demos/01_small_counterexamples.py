"""The naive prism bounds fail already on tiny graphs.

Run: python demos/01_small_counterexamples.py
"""

from __future__ import annotations

from prismdom import build_prism, gamma_variant
from prismdom.families import cycle, path, star

# %% A path on three vertices: swapping an endpoint with the center triples gamma_con.
p3 = path(3)
P = build_prism(p3.graph, p3.canonical_perm)
for variant in ("con", "wcon"):
    base = gamma_variant(p3.graph, variant).value
    prism = gamma_variant(P.graph, variant)
    labels = P.labels(p3.labels)
    print(f"P3 {variant:5s} base {base}  prism {prism.value}  witness {[labels[v] for v in prism.witness]}")

# %% Stars with the center swapped for a leaf.
for k in range(2, 6):
    st = star(k)
    S = build_prism(st.graph, st.canonical_perm).graph
    print(f"K1,{k}: gamma_con(prism) = {gamma_variant(S, 'con').value}, "
          f"gamma_wcon(prism) = {gamma_variant(S, 'wcon').value}")
# K1,2 is P3 again, which is why its convex value is 3 rather than 4.

# %% C7: every weakly convex dominating set of the cycle is the whole cycle,
# but a well-chosen prism is dominated by six vertices.
c7 = cycle(7)
P = build_prism(c7.graph, c7.canonical_perm)
r = gamma_variant(P.graph, "wcon")
labels = P.labels(c7.labels)
print("C7:", gamma_variant(c7.graph, "wcon").value, "-> prism", r.value, [labels[v] for v in r.witness])
