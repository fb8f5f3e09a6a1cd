"""Constructive partitions of graphs without large expanders.

``split_non_expander`` repeatedly peels a sparse piece off a working set
``W`` until ``e(W)`` is small; ``refine`` runs it inside every part of a
partition; ``build_partition`` refines ``ceil(log2(1/alpha))`` times from the
trivial partition. ``volume_decompose`` is the volume-parameterised variant
that deletes sparse cuts until every component is light.

Every guarantee is checked on the output and a failure raises
``AssertionError``. When no sparse piece exists the input contains a large
expander and :class:`~modexp.errors.HypothesisViolated` names the offending
vertex set.

Sparse-cut selection is canonical: the qualifying set with the smallest
bitmask. The smallest one is always connected (a qualifying set splits into
pieces one of which still qualifies and has a smaller mask), so only
connected sets are enumerated, grouped by their largest vertex in
increasing order.
"""

from __future__ import annotations

from collections.abc import Iterable
from dataclasses import dataclass, field
from fractions import Fraction
from typing import NamedTuple

from .bounds import ceil_log2_inverse, lower_bound_no_expanders, lower_bound_volume
from .errors import HypothesisViolated, IsolatedVerticesPresent, OutOfRange, SizeLimitExceeded
from .graph import Graph, Partition, as_ratio, boundary, from_mask, mask_bits, max_in, max_out, to_mask
from .modularity import ScoreBreakdown, score

DEFAULT_MAX_W = 64


def delta_prime(delta: Fraction) -> Fraction:
    """Conductance threshold converted to expansion-by-edges: ``2 delta / (1 - delta)``."""
    return 2 * delta / (1 - delta)


def rho(delta: Fraction) -> Fraction:
    """Boundary growth rate ``delta/(1+delta) * (3+delta)/2``."""
    return delta / (1 + delta) * (3 + delta) / 2


def _check_delta(delta) -> Fraction:
    delta = as_ratio(delta)
    if not 0 < delta < 1:
        raise OutOfRange(f"delta={delta} outside (0, 1)")
    return delta


@dataclass
class DecompositionTrace:
    """Extracted sets in order with the boundary each one added."""

    rounds: list[tuple[frozenset[int], Fraction]] = field(default_factory=list)
    final: Partition | None = None
    params: dict[str, Fraction] = field(default_factory=dict)

    @property
    def total_boundary(self) -> Fraction:
        return sum((b for _, b in self.rounds), Fraction(0))

    def to_text(self) -> str:
        head = " ".join(f"{k} {v}" for k, v in self.params.items())
        lines = [f"params {head}"] if head else []
        running = Fraction(0)
        for i, (s, added) in enumerate(self.rounds, start=1):
            running += added
            lines.append(f"round {i} set {','.join(map(str, sorted(s)))} boundary_added {added} running {running}")
        if self.final is not None:
            lines.append(f"final {self.final}")
        return "\n".join(lines)


def _check_width(mask: int, max_w: int) -> None:
    size = mask.bit_count()
    if size > max_w:
        raise SizeLimitExceeded(size, max_w, "--max-n")


def _first_connected(g: Graph, allowed: int, accept) -> int | None:
    """Smallest-mask connected set inside ``allowed`` satisfying ``accept``."""
    for t in mask_bits(allowed):
        below = allowed & ((1 << (t + 1)) - 1)
        hits = [s for s in g.connected_subsets(t, below) if accept(s)]
        if hits:
            return min(hits)
    return None


def find_sparse_cut(g: Graph, w: Iterable[int] | int, delta_prime: Fraction, max_w: int = DEFAULT_MAX_W) -> frozenset[int] | None:
    """Smallest-mask ``A`` in ``W`` with ``e(A) <= e(W-A)`` and ``e(A, W-A) < delta' e(A)``.

    Returns None when no subset qualifies.
    """
    wmask = to_mask(w)
    _check_width(wmask, max_w)
    dp = as_ratio(delta_prime)
    num, den = dp.numerator, dp.denominator
    e_w = g.int_internal(wmask)

    def accept(a: int) -> bool:
        if a == wmask:
            return False
        ea = g.int_internal(a)
        eb = g.int_internal(wmask ^ a)
        cross = e_w - ea - eb
        return ea <= eb and cross * den < num * ea

    found = _first_connected(g, wmask, accept)
    return None if found is None else from_mask(found)


def _split_mask(g: Graph, u: int, e0: Fraction, delta: Fraction, max_w: int) -> DecompositionTrace:
    """Run the peeling loop inside ``g[u]``; all edge counts are those of ``g``."""
    dp = delta_prime(delta)
    threshold = max(g.internal_edges(u) / 2, e0)
    trace = DecompositionTrace(params={"e0": e0, "delta": delta, "delta_prime": dp, "rho": rho(delta)})
    parts = []
    w = u
    while g.internal_edges(w) > threshold:
        a = find_sparse_cut(g, w, dp, max_w)
        if a is None:
            raise HypothesisViolated(from_mask(w), "no sparse cut inside a set that is still too large")
        am = to_mask(a)
        added = g.internal_edges(w) - g.internal_edges(am) - g.internal_edges(w ^ am)
        trace.rounds.append((a, added))
        parts.append(am)
        w ^= am
    parts.append(w)
    trace.final = Partition.from_masks(parts)
    return trace


def _verify_split(g: Graph, u: int, trace: DecompositionTrace, e0: Fraction, delta: Fraction) -> None:
    dp = delta_prime(delta)
    e_u = g.internal_edges(u)
    cap = max(e_u / 2, e0)
    w = u
    for a, added in trace.rounds:
        am = to_mask(a)
        rest = w ^ am
        if not (am and rest and g.internal_edges(am) <= g.internal_edges(rest) and added < dp * g.internal_edges(am)):
            raise AssertionError(f"extracted set {sorted(a)} fails the sparse-cut predicate")
        w = rest
    for part in trace.final:
        if g.internal_edges(part) > cap:
            raise AssertionError("a part has too many internal edges")
    if trace.total_boundary > rho(delta) * e_u:
        raise AssertionError("boundary exceeds rho * e")


def split_non_expander(g: Graph, e0, delta, max_w: int = DEFAULT_MAX_W) -> DecompositionTrace:
    """Peel sparse pieces off ``V(g)`` while the remainder has more than ``max(e/2, e0)`` edges.

    Parameters
    ----------
    g : Graph
    e0 : Ratio
        Size threshold, positive.
    delta : Ratio
        Conductance threshold in (0, 1); pieces are cut at expansion-by-edges
        below ``2 delta / (1 - delta)``.

    Returns
    -------
    DecompositionTrace
        Every part has at most ``max(e/2, e0)`` internal edges and the
        boundary is at most ``rho * e``; both are asserted.
    """
    e0 = as_ratio(e0)
    if e0 <= 0:
        raise OutOfRange("e0 must be positive")
    delta = _check_delta(delta)
    trace = _split_mask(g, g.all_mask, e0, delta, max_w)
    _verify_split(g, g.all_mask, trace, e0, delta)
    return trace


@dataclass(frozen=True)
class RefineStats:
    boundary_before: Fraction
    boundary_after: Fraction
    max_in_before: Fraction
    max_in_after: Fraction
    max_out_before: Fraction
    max_out_after: Fraction
    traces: tuple[DecompositionTrace, ...]


def refine(g: Graph, a: Partition, e0, delta, max_w: int = DEFAULT_MAX_W) -> tuple[Partition, RefineStats]:
    """Split every part of ``a`` with :func:`split_non_expander` and check the growth bounds."""
    e0 = as_ratio(e0)
    if e0 <= 0:
        raise OutOfRange("e0 must be positive")
    delta = _check_delta(delta)
    a.check_covers(g.n)
    r = rho(delta)
    traces = []
    parts = []
    for part in a:
        mask = to_mask(part)
        trace = _split_mask(g, mask, e0, delta, max_w)
        _verify_split(g, mask, trace, e0, delta)
        traces.append(trace)
        parts.extend(trace.final)
    b = Partition.from_parts(parts)
    stats = RefineStats(
        boundary(g, a), boundary(g, b), max_in(g, a), max_in(g, b), max_out(g, a), max_out(g, b), tuple(traces)
    )
    if stats.boundary_after > (1 - r) * stats.boundary_before + r * g.num_edges:
        raise AssertionError("refinement boundary growth bound fails")
    if stats.max_in_after > max(stats.max_in_before / 2, e0):
        raise AssertionError("refinement max_in bound fails")
    if stats.max_out_after > stats.max_out_before + r * stats.max_in_before:
        raise AssertionError("refinement max_out bound fails")
    return b, stats


class BuildResult(NamedTuple):
    partition: Partition
    score: ScoreBreakdown
    bound: Fraction
    rounds: tuple[Partition, ...]
    stats: tuple[RefineStats, ...]


def build_partition(g: Graph, alpha, delta, max_w: int = DEFAULT_MAX_W) -> BuildResult:
    """Refine ``ceil(log2(1/alpha))`` times from the trivial partition with ``e0 = alpha e``.

    The result's modularity beats the closed-form lower bound; along the way
    the boundary recursion, ``max_in <= alpha e``, ``max_out < 2 rho e`` and
    the largest-volume bound are all asserted.
    """
    alpha = as_ratio(alpha)
    delta = as_ratio(delta)
    if not (0 < alpha <= 1 and 0 < delta <= 1):
        raise OutOfRange(f"need 0 < alpha, delta <= 1, got {alpha}, {delta}")
    if g.num_edges == 0:
        raise OutOfRange("graph has no edges")
    k = ceil_log2_inverse(alpha)
    if k and delta == 1:
        raise OutOfRange("delta must be below 1 when refinement rounds are needed")
    m = g.num_edges
    e0 = alpha * m
    current = Partition.trivial(g.n)
    rounds = [current]
    stats = []
    for _ in range(k):
        current, st = refine(g, current, e0, delta, max_w)
        rounds.append(current)
        stats.append(st)
    r = rho(delta) if delta < 1 else Fraction(2)
    for prev, nxt in zip(rounds, rounds[1:]):
        if boundary(g, nxt) > (1 - r) * boundary(g, prev) + r * m:
            raise AssertionError("boundary recursion fails")
    if max_in(g, current) > alpha * m:
        raise AssertionError("max_in exceeds alpha e")
    if k and not max_out(g, current) < 2 * r * m:
        raise AssertionError("max_out is not below 2 rho e")
    if k and not max(g.volume(p) for p in current) < 2 * min(Fraction(1), alpha + r) * m:
        raise AssertionError("largest part volume bound fails")
    sc = score(g, current)
    bound = lower_bound_no_expanders(alpha, delta)
    # with no rounds the trivial partition meets the bound with equality
    if not (sc.q > bound if k else sc.q >= bound):
        raise AssertionError(f"score {sc.q} does not beat bound {bound}")
    return BuildResult(current, sc, bound, tuple(rounds), tuple(stats))


class VolumeResult(NamedTuple):
    partition: Partition
    score: ScoreBreakdown
    bound: Fraction
    deleted: Fraction
    trace: DecompositionTrace


def volume_decompose(g: Graph, beta, delta, max_w: int = DEFAULT_MAX_W) -> VolumeResult:
    """Delete sparse cuts until every component has volume at most ``beta vol(G)``.

    A heavy component ``A`` is cut along the smallest-mask ``S`` with
    ``vol(S) <= vol(A - S)`` and ``e(S, A - S) < delta vol(S)``. Volumes and
    degrees always refer to the original graph. The deleted weight is
    certified against ``delta ceil(log2(1/beta)) vol(G)`` through per-vertex
    charges.
    """
    beta, delta = as_ratio(beta), as_ratio(delta)
    if not (0 < beta <= 1 and 0 < delta <= 1):
        raise OutOfRange(f"need 0 < beta, delta <= 1, got {beta}, {delta}")
    if g.has_isolated_vertices():
        raise IsolatedVerticesPresent(f"isolated vertices {g.isolated_vertices()}")
    total = sum(g.int_degrees)
    deg = g.int_degrees
    num, den = delta.numerator, delta.denominator
    work = g
    charge = [0] * g.n  # in units of delta * scaled degree
    deleted = 0
    trace = DecompositionTrace(params={"beta": beta, "delta": delta})
    while True:
        heavy = [c for c in work.component_masks() if g.int_volume(c) * beta.denominator > beta.numerator * total]
        if not heavy:
            break
        comp = heavy[0]
        _check_width(comp, max_w)
        vol_a = g.int_volume(comp)

        def accept(s: int) -> bool:
            vs = g.int_volume(s)
            return s != comp and 2 * vs <= vol_a and work.int_cut(s) * den < num * vs

        found = _first_connected(work, comp, accept)
        if found is None:
            raise HypothesisViolated(from_mask(comp), "no sparse volume cut inside a heavy component")
        cut = work.int_cut(found)
        deleted += cut
        for v in mask_bits(found):
            charge[v] += 1
        trace.rounds.append((from_mask(found), Fraction(cut, g.scale)))
        work = Graph(g.n, [(u, v, w) for u, v, w in work.edges if (found >> u & 1) == (found >> v & 1)])
    final = Partition.from_masks(work.component_masks())
    trace.final = final
    k = ceil_log2_inverse(beta)
    if any(c > k for c in charge):
        raise AssertionError("a vertex was charged more than ceil(log2(1/beta)) times")
    # every deleted edge is paid for by the charges on the smaller side
    if deleted * den > num * sum(c * d for c, d in zip(charge, deg)):
        raise AssertionError("deleted weight exceeds the charges")
    if deleted * den > num * k * total:
        raise AssertionError("deleted weight exceeds delta ceil(log2(1/beta)) vol(G)")
    sc = score(g, final)
    bound = lower_bound_volume(beta, delta)
    if sc.q < bound:
        raise AssertionError(f"score {sc.q} below bound {bound}")
    return VolumeResult(final, sc, bound, Fraction(deleted, g.scale), trace)


__all__ = [
    "DecompositionTrace",
    "RefineStats",
    "BuildResult",
    "VolumeResult",
    "delta_prime",
    "rho",
    "find_sparse_cut",
    "split_non_expander",
    "refine",
    "build_partition",
    "volume_decompose",
]
