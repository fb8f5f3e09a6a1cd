"""When does an optimal partition split a small component?

A clique with pendant leaves is padded with disjoint edges so that it
carries a fraction ``alpha`` of all edges. The verdict compares ``alpha``
with the component's expansion by products.
"""

from __future__ import annotations

from fractions import Fraction

from modexp import all_optimal, classic_resolution_bound, resolution_verdict
from modexp.constructions import clique_with_leaves, with_disjoint_edges

h = clique_with_leaves(3, 2)
comp = frozenset(range(h.n))
for alpha in (Fraction(1, 4), Fraction(1, 2), Fraction(3, 4)):
    g = with_disjoint_edges(h, alpha)
    v = resolution_verdict(g, comp)
    optima = all_optimal(g).all_optimal
    split = sorted({p.part_of(0) != comp for p in optima})
    print(f"alpha {alpha}: hh = {v.hh_component}, verdict {v.decision}, optima split? {split}")
    print(f"    classic size rule fires: {classic_resolution_bound(g, comp)}")
