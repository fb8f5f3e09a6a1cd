"""Deterministic generators for the extremal graph families, plus pendant collapse.

Labeling conventions
--------------------
windmill(l)
    centre 0, leaves ``1..2l``, matching edges ``(2i-1, 2i)``.
clique_with_leaves(k, l)
    clique ``0..k-1``; leaf ``j`` of clique vertex ``i`` is ``k + i*l + j``.
weighted_clique_loops(a, b, k)
    vertices ``0..k-1``, each with a loop of weight ``a/2``.
kary_depth2(k)
    root 0, inner vertices ``1..k``, leaf ``j`` of inner ``i`` is
    ``k + 1 + (i-1)*k + j``.
Padding edges are always appended on fresh vertices after the base graph.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction

from .errors import DegenerateParameters, OutOfRange, TooManyEdgesInH
from .graph import Graph, as_ratio


def complete_graph(k: int) -> Graph:
    return Graph(k, [(u, v, 1) for u in range(k) for v in range(u + 1, k)])


def path_graph(n: int) -> Graph:
    return Graph(n, [(i, i + 1, 1) for i in range(n - 1)])


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise OutOfRange("a cycle needs at least 3 vertices")
    return Graph(n, [(i, (i + 1) % n, 1) for i in range(n)])


def star_graph(leaves: int) -> Graph:
    return Graph(leaves + 1, [(0, i, 1) for i in range(1, leaves + 1)])


def disjoint_copies(g: Graph, count: int) -> Graph:
    out = Graph(0)
    for _ in range(count):
        out = out.disjoint_union(g)
    return out


def _padding(h: Graph, alpha) -> int:
    """``floor(e(H) (1 - alpha) / alpha)``."""
    alpha = as_ratio(alpha)
    if not 0 < alpha <= 1:
        raise OutOfRange(f"alpha={alpha} outside (0, 1]")
    return math.floor(h.num_edges * (1 - alpha) / alpha)


def g_h_padding(h: Graph, m: int) -> Graph:
    """``h`` plus ``m - e(h)`` disjoint unit edges, so that ``e = m``."""
    e = h.num_edges
    if e.denominator != 1:
        raise OutOfRange("h must have integer total weight")
    if e > m:
        raise TooManyEdgesInH(f"e(h) = {e} exceeds m = {m}")
    return h.with_disjoint_edges(m - int(e))


def padding_partition_score(h: Graph, m: int) -> Fraction:
    """Modularity of ``{V(h)}`` plus one part per padding edge, in closed form."""
    e = h.num_edges
    return 1 - (h.total_volume**2 + 4 * (m - e)) / (4 * m * m)


def g_alpha(alpha, m: int) -> Graph:
    """Disjoint cliques on ``s = floor(sqrt(2 alpha m))`` vertices, topped up to exactly ``m`` edges.

    Whole ``K_s`` copies are added while the budget allows; then the largest
    ``K_t`` that fits the remainder; then disjoint edges for what is left.
    """
    alpha = as_ratio(alpha)
    if not 0 < alpha < 1:
        raise OutOfRange(f"alpha={alpha} outside (0, 1)")
    if m < 2:
        raise OutOfRange("m must be at least 2")
    s = math.isqrt(math.floor(2 * alpha * m))
    if s < 2:
        raise DegenerateParameters(f"clique size {s} is below 2")
    block = math.comb(s, 2)
    g = Graph(0)
    remaining = m
    while remaining >= block:
        g = g.disjoint_union(complete_graph(s))
        remaining -= block
    t = s - 1
    while t >= 2 and math.comb(t, 2) > remaining:
        t -= 1
    if t >= 2 and remaining:
        g = g.disjoint_union(complete_graph(t))
        remaining -= math.comb(t, 2)
    return g.with_disjoint_edges(remaining)


def windmill(l: int) -> Graph:
    """Star with ``2l`` leaves plus a perfect matching on the leaves."""
    if l < 2:
        raise OutOfRange("windmill needs l >= 2")
    edges = [(0, i, 1) for i in range(1, 2 * l + 1)]
    edges += [(2 * i - 1, 2 * i, 1) for i in range(1, l + 1)]
    return Graph(2 * l + 1, edges)


def clique_with_leaves(k: int, l: int) -> Graph:
    """``K_k`` with ``l`` pendant leaves hung on every clique vertex."""
    if k < 2 or l < 1:
        raise OutOfRange("need k >= 2 and l >= 1")
    edges = [(u, v, 1) for u in range(k) for v in range(u + 1, k)]
    edges += [(i, k + i * l + j, 1) for i in range(k) for j in range(l)]
    return Graph(k + k * l, edges)


def with_disjoint_edges(h: Graph, alpha) -> Graph:
    """``h`` plus ``floor(e(h)(1 - alpha)/alpha)`` disjoint unit edges."""
    return h.with_disjoint_edges(_padding(h, alpha))


def weighted_clique_loops(a, b, k: int) -> Graph:
    """``K_k`` with edge weight ``b/(k-1)`` and a loop of weight ``a/2`` at every vertex."""
    a, b = as_ratio(a), as_ratio(b)
    if a <= 0 or b <= 0 or k < 2:
        raise OutOfRange("need a, b > 0 and k >= 2")
    w = b / (k - 1)
    edges = [(u, v, w) for u in range(k) for v in range(u + 1, k)]
    edges += [(v, v, a / 2) for v in range(k)]
    return Graph(k, edges)


def g_w(hw: Graph, alpha) -> Graph:
    return with_disjoint_edges(hw, alpha)


def kary_depth2(k: int) -> Graph:
    """Complete ``k``-ary tree of depth two."""
    if k < 2:
        raise OutOfRange("need k >= 2")
    edges = [(0, i, 1) for i in range(1, k + 1)]
    edges += [(i, k + 1 + (i - 1) * k + j, 1) for i in range(1, k + 1) for j in range(k)]
    return Graph(k * k + k + 1, edges)


def kary_partition_parts(k: int) -> list[list[int]]:
    """The root alone plus each inner vertex with its leaves."""
    parts = [[0]]
    for i in range(1, k + 1):
        parts.append([i] + [k + 1 + (i - 1) * k + j for j in range(k)])
    return parts


def collapse_pendants(j: Graph, return_map: bool = False):
    """Replace pendant leaves by loops on their neighbour and isolated edges by loops.

    A leaf is a loop-free vertex with exactly one distinct neighbour. A
    non-leaf vertex with adjacent leaves receives a loop whose weight is the
    total weight of its pendant edges; an edge ``uv`` whose ends are both
    leaves becomes a loop at ``min(u, v)``. Remaining vertices are relabelled
    in increasing order; with ``return_map`` the old-to-new map is returned
    too (removed leaves map to the vertex that absorbed them).
    """
    adj = j.adjacency
    leaf = [not j.loops[v] and len(adj[v]) == 1 for v in range(j.n)]
    absorbed_into = list(range(j.n))
    extra_loop: dict[int, Fraction] = {}
    for v in range(j.n):
        if not leaf[v]:
            continue
        (u, w), = adj[v].items()
        if leaf[u]:
            if v < u:
                continue
            absorbed_into[v] = u
            extra_loop[u] = extra_loop.get(u, Fraction(0)) + w
        else:
            absorbed_into[v] = u
            extra_loop[u] = extra_loop.get(u, Fraction(0)) + w
    kept = [v for v in range(j.n) if absorbed_into[v] == v]
    index = {v: i for i, v in enumerate(kept)}
    edges = []
    for u, v, w in j.edges:
        if absorbed_into[u] != u or absorbed_into[v] != v:
            continue
        if u != v and (leaf[u] or leaf[v]):
            continue
        edges.append((index[u], index[v], w))
    edges += [(index[v], index[v], w) for v, w in sorted(extra_loop.items())]
    out = Graph(len(kept), edges)
    if return_map:
        return out, {v: index[absorbed_into[v]] for v in range(j.n)}
    return out


@dataclass(frozen=True)
class FamilySpec:
    """A named family with its parameters; :meth:`build` generates it."""

    family: str
    params: dict = field(default_factory=dict)

    def build(self) -> Graph:
        p = self.params
        f = self.family
        if f == "windmill":
            return windmill(int(p["l"]))
        if f == "g_alpha":
            return g_alpha(p["alpha"], int(p["m"]))
        if f == "kary_depth2":
            return kary_depth2(int(p["k"]))
        if f == "clique_leaves":
            h = clique_with_leaves(int(p["k"]), int(p["l"]))
            return with_disjoint_edges(h, p["alpha"]) if "alpha" in p else h
        if f == "weighted_clique_loops":
            return weighted_clique_loops(p["a"], p["b"], int(p["k"]))
        if f == "g_w":
            return g_w(weighted_clique_loops(p["a"], p["b"], int(p["k"])), p["alpha"])
        if f == "g_h_padding":
            return g_h_padding(p["h"], int(p["m"]))
        raise OutOfRange(f"unknown family {f!r}")
