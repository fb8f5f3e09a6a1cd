"""Generators for the extremal families and the numbers they certify."""

from __future__ import annotations

from fractions import Fraction

from modexp import conductance, expansion_by_products, f_of_alpha, maximize, score
from modexp.constructions import (
    g_alpha,
    g_h_padding,
    complete_graph,
    kary_depth2,
    kary_partition_parts,
    padding_partition_score,
    weighted_clique_loops,
)
from modexp.graph import Partition

# %% Disjoint cliques: q* approaches 1 - f(alpha).
for alpha in (Fraction(1, 4), Fraction(1, 2)):
    for m in (100, 200):
        q = maximize(g_alpha(alpha, m), prune=True).q_star
        print(f"G_alpha alpha={alpha} m={m}: q* = {float(q):.4f}, 1 - f = {float(1 - f_of_alpha(alpha)):.4f}")

# %% Padding a clique with isolated edges.
k5 = complete_graph(5)
for m in (50, 100):
    print(f"K5 padded to m={m}: explicit partition scores {padding_partition_score(k5, m)}")
    assert g_h_padding(k5, m).num_edges == m

# %% Weighted cliques with loops have a closed-form expansion by products.
for k in (2, 3, 4):
    hw = weighted_clique_loops(1, 2, k)
    print(f"H_w(1,2,{k}): hh = {expansion_by_products(hw).value}")

# %% A tree whose central star is an expander of more than half the volume.
for k in (4, 6):
    g = kary_depth2(k)
    star, _ = g.induced(range(k + 1))
    q = score(g, Partition.from_parts(kary_partition_parts(k))).q
    print(f"kary({k}): star h = {conductance(star).value}, star partition q = {q} > {1 - Fraction(2, k)}")
