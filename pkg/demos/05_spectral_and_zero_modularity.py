"""Spectral gap versus expansion by products, and the zero-modularity criteria."""

from __future__ import annotations

from modexp import SplitMix64, expansion_by_products, is_zero_modularity, spectral_gap
from modexp.constructions import complete_graph, cycle_graph
from modexp.rng import random_connected_graph

print(f"gap(K4) = {spectral_gap(complete_graph(4)).gap:.12f}")
print(f"gap(C4) = {spectral_gap(cycle_graph(4)).gap:.12f}")

# %% The mixing bound hh >= 1 - gap on random graphs.
rng = SplitMix64(5)
worst = 1.0
for _ in range(30):
    g = random_connected_graph(rng, rng.randint(3, 8), 0.5)
    slack = float(expansion_by_products(g).value) - (1 - spectral_gap(g).gap)
    worst = min(worst, slack)
print(f"smallest slack over 30 graphs: {worst:.4f}")

# %% Three ways to decide q* = 0.
for name, g in [("K5", complete_graph(5)), ("C5", cycle_graph(5)), ("C4", cycle_graph(4))]:
    answers = {m: is_zero_modularity(g, m) for m in ("direct", "geometric-mean", "products")}
    print(name, answers)
