"""Cutting a graph into pieces without large expanders, with certified bounds."""

from __future__ import annotations

from fractions import Fraction

from modexp import HypothesisViolated, build_partition, split_non_expander, volume_decompose
from modexp.constructions import complete_graph, disjoint_copies, kary_depth2, path_graph

# %% One peeling pass on a path; the trace lists every cut.
trace = split_non_expander(path_graph(9), 2, Fraction(1, 2))
print(trace.to_text())

# %% Repeated refinement until no part holds more than alpha * e edges.
tri = disjoint_copies(complete_graph(3), 4)
res = build_partition(tri, Fraction(1, 4), Fraction(1, 2))
print(f"triangles: {res.partition}  q = {res.score.q}  lower bound {res.bound}")

# %% Volume-driven cuts on a depth-two tree.
vr = volume_decompose(kary_depth2(6), Fraction(1, 2), Fraction(1, 3))
print(f"kary(6): {len(vr.partition)} parts, q = {vr.score.q}, deleted weight {vr.deleted}")

# %% A dense expander cannot be cut; the offending vertex set is reported.
try:
    volume_decompose(complete_graph(4), Fraction(1, 2), Fraction(1, 100))
except HypothesisViolated as err:
    print(f"K4 refuses to split: {sorted(err.vertices)}")
