"""Modularity bounds in terms of subgraph size and expansion, and split verdicts.

Upper bounds take a vertex set ``S`` whose induced subgraph ``H`` carries a
fraction ``alpha = e(H)/e(G)`` of the edges; lower bounds are closed-form in
``alpha`` (or a volume fraction ``beta``) and an expansion threshold
``delta``. :func:`resolution_verdict` decides exactly whether a connected
component is kept whole by every optimal partition.
"""

from __future__ import annotations

from collections.abc import Iterable
from dataclasses import dataclass, field
from fractions import Fraction

from .errors import (
    Disconnected,
    EdgelessSubgraph,
    IsolatedVerticesPresent,
    NotAComponent,
    NotAComponentUnion,
    OutOfRange,
)
from .expansion import DEFAULT_MAX_N, expansion_by_products
from .graph import Graph, Partition, as_ratio, from_mask, mask_bits, to_mask
from .modularity import DEFAULT_MAX_COMPONENT, component_optima, f_of_alpha, is_zero_modularity
from .spectral import spectral_gap

NOT_SPLIT = "NotSplit"
SPLIT = "Split"
BOUNDARY = "Boundary"


@dataclass(frozen=True)
class BoundReport:
    bound: Fraction
    ingredients: dict[str, Fraction] = field(default_factory=dict)


@dataclass(frozen=True)
class SplitVerdict:
    decision: str
    alpha: Fraction
    hh_component: Fraction
    witness_unsplit: Partition | None = None
    witness_split: Partition | None = None


def ceil_log2_inverse(x: Fraction) -> int:
    """Smallest ``k >= 0`` with ``2**k * x >= 1``, i.e. ``ceil(log2(1/x))`` exactly."""
    x = as_ratio(x)
    if x <= 0:
        raise OutOfRange("argument must be positive")
    k = 0
    while x * (1 << k) < 1:
        k += 1
    return k


def _edge_subgraph(g: Graph, vertices) -> tuple[Graph, Fraction]:
    """The induced subgraph with its own isolated vertices dropped, and ``alpha``."""
    h, _ = g.induced(vertices)
    if h.num_edges == 0:
        raise EdgelessSubgraph("the chosen vertex set spans no edges")
    h, _ = h.without_isolated()
    return h, h.num_edges / g.num_edges


def upper_bound_subgraph(g: Graph, h_vertices: Iterable[int], max_n: int = DEFAULT_MAX_N) -> BoundReport:
    """``q*(G) <= 1 - alpha * min(hh_H, alpha)`` for the subgraph induced by ``h_vertices``."""
    h, alpha = _edge_subgraph(g, h_vertices)
    hh = expansion_by_products(h, max_n=max_n).value
    return BoundReport(1 - alpha * min(hh, alpha), {"alpha": alpha, "hh": hh})


def detailed_upper_bound(
    g: Graph,
    h_vertices: Iterable[int],
    p: Partition,
    max_n: int = DEFAULT_MAX_N,
    hh: Fraction | None = None,
) -> Fraction:
    """Partition-specific bound ``1 - a hh + a (hh - a) sum_B x_B**2`` dominating ``q_p(G)``.

    ``B`` ranges over the nonempty traces of ``p`` on ``V(H)`` and
    ``x_B = vol_H(B) / vol(H)``. Pass ``hh`` to reuse a known value of the
    subgraph's expansion-by-products.
    """
    p.check_covers(g.n)
    h_vertices = from_mask(to_mask(h_vertices))
    sub, alpha = _edge_subgraph(g, h_vertices)
    h_full, keep = g.induced(h_vertices)
    index = {v: i for i, v in enumerate(keep)}
    if hh is None:
        hh = expansion_by_products(sub, max_n=max_n).value
    vol_h = h_full.total_volume
    sq = sum((h_full.volume([index[v] for v in part]) ** 2 for part in p.restrict(h_vertices)), Fraction(0)) / vol_h**2
    return 1 - alpha * hh + alpha * (hh - alpha) * sq


def lower_bound_no_expanders(alpha, delta) -> Fraction:
    """``1 - f(min(1, alpha + 3 delta/2)) - (3/2) delta ceil(log2(1/alpha))``.

    Valid when every induced subgraph with at least an ``alpha`` fraction of
    the edges has conductance below ``delta``.
    """
    alpha, delta = as_ratio(alpha), as_ratio(delta)
    if not (0 < alpha <= 1 and 0 <= delta <= 1):
        raise OutOfRange(f"need 0 < alpha <= 1 and 0 <= delta <= 1, got {alpha}, {delta}")
    three_halves = Fraction(3, 2)
    return 1 - f_of_alpha(min(Fraction(1), alpha + three_halves * delta)) - three_halves * delta * ceil_log2_inverse(alpha)


def lower_bound_volume(beta, delta) -> Fraction:
    """``1 - f(beta) - 2 delta ceil(log2(1/beta))`` for the volume-parameterised case."""
    beta, delta = as_ratio(beta), as_ratio(delta)
    if not (0 < beta <= 1 and 0 <= delta <= 1):
        raise OutOfRange(f"need 0 < beta <= 1 and 0 <= delta <= 1, got {beta}, {delta}")
    return 1 - f_of_alpha(beta) - 2 * delta * ceil_log2_inverse(beta)


def spectral_upper_bound(g: Graph, h_vertices: Iterable[int]) -> float:
    """``1 - alpha * min(alpha, 1 - gap_H)``; float because the gap is."""
    h, _ = g.induced(h_vertices)
    if h.num_edges == 0:
        raise EdgelessSubgraph("the chosen vertex set spans no edges")
    if not h.is_connected():
        raise Disconnected("spectral bound needs a connected subgraph")
    alpha = float(h.num_edges / g.num_edges)
    gap = spectral_gap(h).gap
    return 1.0 - alpha * min(alpha, 1.0 - gap)


def _require_component_union(g: Graph, mask: int) -> None:
    for comp in g.component_masks():
        if comp & mask and comp & ~mask:
            raise NotAComponentUnion("vertex set cuts through a connected component")


def partial_score(g: Graph, h_component: Iterable[int], b: Partition) -> Fraction:
    """Contribution ``sum_B e(B)/e(G) - vol(B)**2/vol(G)**2`` of a component union."""
    mask = to_mask(h_component)
    _require_component_union(g, mask)
    if b.support != from_mask(mask):
        raise NotAComponentUnion("b must partition exactly the given vertex set")
    m, vol = g.num_edges, g.total_volume
    return sum((g.internal_edges(part) / m - g.volume(part) ** 2 / vol**2 for part in b), Fraction(0))


def _component_checks(g: Graph, component: Iterable[int]) -> tuple[int, Graph]:
    mask = to_mask(component)
    if mask not in g.component_masks():
        raise NotAComponent("vertex set is not a connected component")
    if g.has_isolated_vertices():
        raise IsolatedVerticesPresent(f"isolated vertices {g.isolated_vertices()}")
    h, _ = g.induced(mask)
    if h.num_edges == 0:
        raise EdgelessSubgraph("component has no edges")
    return mask, h


def resolution_verdict(
    g: Graph,
    component: Iterable[int],
    *,
    max_n: int = DEFAULT_MAX_N,
    max_component: int = DEFAULT_MAX_COMPONENT,
) -> SplitVerdict:
    """Is ``component`` split by the optimal partitions of ``g``?

    Exact comparison of ``alpha = e(H)/e(G)`` with ``hh_H``: ``Split`` if
    larger, ``NotSplit`` if smaller, ``Boundary`` if equal. At the boundary
    both witnesses are built: the component whole, and the component cut
    along its ``hh`` witness, each completed by an optimum of the rest.
    """
    mask, h = _component_checks(g, component)
    alpha = h.num_edges / g.num_edges
    if h.n < 2:
        # a single vertex carrying loops cannot be split at all
        return SplitVerdict(NOT_SPLIT, alpha, Fraction(2))
    report = expansion_by_products(h, max_n=max_n)
    hh = report.value
    if alpha < hh:
        return SplitVerdict(NOT_SPLIT, alpha, hh)
    if alpha > hh:
        return SplitVerdict(SPLIT, alpha, hh)
    keep = mask_bits(mask)
    witness = frozenset(keep[i] for i in report.witness)
    rest_parts = []
    others = [c for c in g.component_masks() if c != mask]
    for opt in component_optima(g, max_component=max_component, only=others):
        rest_parts.extend(from_mask(s) for s in opt.best)
    whole = frozenset(keep)
    unsplit = Partition.from_parts(rest_parts + [whole])
    split = Partition.from_parts(rest_parts + [witness, whole - witness])
    return SplitVerdict(BOUNDARY, alpha, hh, unsplit, split)


def classic_resolution_bound(g: Graph, component: Iterable[int]) -> bool:
    """``e(H)**2 < 2 e(G)``: the component is too small to be split.

    The implication to ``NotSplit`` needs every cut of ``H`` to weigh at
    least 1, which holds when non-loop weights are at least 1 (e.g. simple
    graphs). With lighter edges the flag is only informative.
    """
    _, h = _component_checks(g, component)
    return h.num_edges**2 < 2 * g.num_edges


def zero_component_unsplit(
    g: Graph,
    component: Iterable[int],
    *,
    verify: bool = True,
    method: str = "products",
    max_component: int = DEFAULT_MAX_COMPONENT,
) -> bool:
    """True iff the component has zero modularity (so it is one part of every optimum).

    ``method`` selects the zero-modularity criterion (see
    :func:`~modexp.modularity.is_zero_modularity`); the default avoids a full
    maximisation so large cliques are cheap.

    With ``verify`` the component's own exact optimum list is checked to
    contain only the one-part partition.
    """
    mask, h = _component_checks(g, component)
    if not h.num_edges < g.num_edges:
        raise ValueError("the component must not carry all the edges")
    zero = is_zero_modularity(h, method, max_component=max_component)
    if zero and verify:
        for opt in component_optima(g, max_component=max_component, want_all=True, only=[mask]):
            if opt.all_best != ((mask,),):
                raise AssertionError("zero-modularity component is split by an optimal partition")
    return zero
