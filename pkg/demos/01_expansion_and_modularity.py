"""Exact expansion constants and maximum modularity on a few small graphs.

Run with ``python demos/01_expansion_and_modularity.py``.
"""

from __future__ import annotations

from modexp import conductance, expansion_by_edges, expansion_by_products, maximize, score
from modexp.constructions import complete_graph, cycle_graph, path_graph, windmill
from modexp.graph import Partition

# %% Three expansion constants side by side. Everything is a Fraction.
for name, g in [("K4", complete_graph(4)), ("C6", cycle_graph(6)), ("P6", path_graph(6)), ("W2", windmill(2))]:
    h = conductance(g)
    hh = expansion_by_products(g)
    hp = expansion_by_edges(g)
    print(f"{name:3}  h = {str(h.value):5}  hh = {str(hh.value):5}  h' = {hp.value}   witness {sorted(h.witness)}")

# %% Maximum modularity. Complete graphs score zero; paths and cycles do not.
for name, g in [("K4", complete_graph(4)), ("C6", cycle_graph(6)), ("P6", path_graph(6)), ("W2", windmill(2))]:
    rep = maximize(g)
    print(f"{name:3}  q* = {rep.q_star}   optimum {rep.optimal}")

# %% Coverage minus degree tax for a hand-made partition of the windmill.
w2 = windmill(2)
parts = Partition.from_parts([[0], [1, 2], [3, 4]])
sb = score(w2, parts)
print(f"W2 with {parts}: coverage {sb.coverage}, tax {sb.degree_tax}, q = {sb.q}")
