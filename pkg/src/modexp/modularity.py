"""Exact modularity: scores, maximisation, optimal-partition sets, f(alpha).

Maximisation works component by component. Optimal parts never cross
components and, once isolated vertices are set aside, every optimal part
induces a connected subgraph; so for each component we search only
partitions into connected parts. The search is a memoised recursion over the
set ``R`` of not-yet-placed vertices: the lowest vertex of ``R`` must lie in
some connected ``S`` inside ``R``, giving

    best(R) = max_S  key(S) + best(R - S)

with the integer part key ``4 M e(S) - vol(S)**2`` (``M`` the scaled edge
total), i.e. ``4 M**2`` times the part's contribution to the global score.
Because the key uses global totals, per-component optima add up directly.

Isolated vertices form singleton parts: they change neither coverage nor
degree tax, and optimal-partition lists are reported modulo their placement.
"""

from __future__ import annotations

import itertools
from collections.abc import Iterable, Iterator
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .errors import EmptyGraph, OutOfRange, SizeLimitExceeded
from .expansion import DEFAULT_MAX_N, expansion_by_products, subset_tables
from .graph import Graph, Partition, as_ratio

DEFAULT_MAX_COMPONENT = 14
DEFAULT_MAX_PARTITIONS = 1_000_000


@dataclass(frozen=True)
class ScoreBreakdown:
    q: Fraction
    coverage: Fraction
    degree_tax: Fraction


@dataclass(frozen=True)
class ModularityReport:
    q_star: Fraction
    optimal: Partition
    all_optimal: tuple[Partition, ...] | None = None


@dataclass(frozen=True)
class ComponentOptimum:
    """Best contribution of one component and every part-list attaining it."""

    mask: int
    value: Fraction
    best: tuple[int, ...]
    all_best: tuple[tuple[int, ...], ...] | None


def score(g: Graph, p: Partition) -> ScoreBreakdown:
    """Coverage, degree tax and modularity of ``p`` on ``g``."""
    p.check_covers(g.n)
    m = g.num_edges
    if m == 0:
        zero = Fraction(0)
        return ScoreBreakdown(zero, zero, zero)
    coverage = sum((g.internal_edges(a) for a in p), Fraction(0)) / m
    tax = sum((g.volume(a) ** 2 for a in p), Fraction(0)) / (4 * m * m)
    return ScoreBreakdown(coverage - tax, coverage, tax)


def part_contribution(g: Graph, mask: int) -> Fraction:
    """``e(S)/m - vol(S)**2 / (4 m**2)`` for one part."""
    m2 = sum(g.int_degrees)
    return Fraction(2 * m2 * g.int_internal(mask) - g.int_volume(mask) ** 2, m2 * m2)


class _ComponentSolver:
    def __init__(self, g: Graph, comp: int) -> None:
        self.g = g
        self.comp = comp
        self.big_m = sum(g.int_degrees) // 2
        self.keys: dict[int, int] = {}
        self.best: dict[int, int] = {0: 0}
        self.choices: dict[int, list[int]] = {}

    def key(self, s: int) -> int:
        k = self.keys.get(s)
        if k is None:
            k = 4 * self.big_m * self.g.int_internal(s) - self.g.int_volume(s) ** 2
            self.keys[s] = k
        return k

    def solve(self, r: int) -> int:
        got = self.best.get(r)
        if got is not None:
            return got
        v = (r & -r).bit_length() - 1
        top = None
        arg: list[int] = []
        for s in self.g.connected_subsets(v, r):
            val = self.key(s) + self.solve(r ^ s)
            if top is None or val > top:
                top, arg = val, [s]
            elif val == top:
                arg.append(s)
        arg.sort()
        self.best[r] = top
        self.choices[r] = arg
        return top

    def canonical(self) -> tuple[int, ...]:
        out = []
        r = self.comp
        while r:
            s = self.choices[r][0]
            out.append(s)
            r ^= s
        return tuple(out)

    def expand(self, r: int, memo: dict[int, list[tuple[int, ...]]]) -> list[tuple[int, ...]]:
        if r == 0:
            return [()]
        if r in memo:
            return memo[r]
        out = []
        for s in self.choices[r]:
            out.extend((s,) + rest for rest in self.expand(r ^ s, memo))
        memo[r] = out
        return out


def _check_size(comp: int, cap: int) -> None:
    size = comp.bit_count()
    if size > cap:
        raise SizeLimitExceeded(size, cap, "max_component")


def _provably_whole(g: Graph, comp: int) -> bool:
    """A component with zero modularity and ``e(H) < e(G)`` is one part of every optimum.

    Zero modularity is tested as ``hh_H >= 1``, which is equivalent.
    """
    h, _ = g.induced(comp)
    if h.n < 2:
        return True
    return h.num_edges < g.num_edges and expansion_by_products(h, max_n=DEFAULT_MAX_N).value >= 1


def component_optima(
    g: Graph,
    *,
    max_component: int = DEFAULT_MAX_COMPONENT,
    want_all: bool = False,
    prune: bool = False,
    only: Iterable[int] | None = None,
) -> list[ComponentOptimum]:
    """Exact optimum of every connected component's contribution.

    ``only`` restricts the work to the listed component masks. With
    ``prune=True`` components of zero modularity that are not the whole
    edge set are fixed as a single part without search (they are never split
    in an optimal partition); this permits large cliques.
    """
    total = sum(g.int_degrees)
    out = []
    wanted = None if only is None else set(only)
    for comp in g.component_masks():
        if wanted is not None and comp not in wanted:
            continue
        if comp & (comp - 1) == 0 or (prune and _provably_whole(g, comp)):
            value = part_contribution(g, comp) if total else Fraction(0)
            out.append(ComponentOptimum(comp, value, (comp,), ((comp,),) if want_all else None))
            continue
        _check_size(comp, max_component)
        solver = _ComponentSolver(g, comp)
        top = solver.solve(comp)
        m2 = total
        value = Fraction(top, m2 * m2)
        all_best = tuple(solver.expand(comp, {})) if want_all else None
        out.append(ComponentOptimum(comp, value, solver.canonical(), all_best))
    return out


def maximize(g: Graph, *, max_component: int = DEFAULT_MAX_COMPONENT, prune: bool = False) -> ModularityReport:
    """``q*(G)`` and one optimal partition (smallest-mask tie-breaking)."""
    if g.num_edges == 0:
        return ModularityReport(Fraction(0), Partition.trivial(g.n))
    opts = component_optima(g, max_component=max_component, prune=prune)
    q = sum((o.value for o in opts), Fraction(0))
    parts = [s for o in opts for s in o.best]
    return ModularityReport(q, Partition.from_masks(parts))


def all_optimal(
    g: Graph,
    *,
    max_component: int = DEFAULT_MAX_COMPONENT,
    max_partitions: int = DEFAULT_MAX_PARTITIONS,
) -> ModularityReport:
    """Every optimal partition into connected parts, sorted, exact ties only."""
    if g.num_edges == 0:
        trivial = Partition.trivial(g.n)
        return ModularityReport(Fraction(0), trivial, (trivial,))
    opts = component_optima(g, max_component=max_component, want_all=True)
    count = 1
    for o in opts:
        count *= len(o.all_best)
    if count > max_partitions:
        raise SizeLimitExceeded(count, max_partitions, "max_partitions")
    q = sum((o.value for o in opts), Fraction(0))
    found = [Partition.from_masks([s for piece in combo for s in piece]) for combo in itertools.product(*(o.all_best for o in opts))]
    found.sort(key=Partition.sort_key)
    best = Partition.from_masks([s for o in opts for s in o.best])
    return ModularityReport(q, best, tuple(found))


def is_zero_modularity(g: Graph, method: str = "direct", *, max_component: int = DEFAULT_MAX_COMPONENT) -> bool:
    """Decide ``q*(G) = 0`` by one of three equivalent criteria.

    ``direct`` maximises modularity; ``geometric-mean`` checks
    ``e(A, Ā)**2 >= 4 e(A) e(Ā)`` for every cut; ``products`` checks
    ``hh_G >= 1``. Isolated vertices are dropped first (they affect none of
    the three).
    """
    if g.num_edges == 0:
        raise EmptyGraph("zero-modularity test needs at least one edge")
    h, _ = g.without_isolated()
    if method == "direct":
        return maximize(h, max_component=max_component).q_star == 0
    if h.n < 2:
        return True
    if method == "geometric-mean":
        total = sum(h.int_degrees) // 2
        for _, _, internal, cut in subset_tables(h):
            other = total - internal - cut
            if np.any(cut * cut < 4 * internal * other):
                return False
        return True
    if method == "products":
        return expansion_by_products(h).value >= 1
    raise ValueError(f"unknown method {method!r}")


def f_of_alpha(alpha) -> Fraction:
    """Largest ``sum x_i**2`` with ``0 <= x_i <= alpha`` and ``sum x_i = 1``."""
    alpha = as_ratio(alpha)
    if not 0 < alpha <= 1:
        raise OutOfRange(f"alpha={alpha} outside (0, 1]")
    k = int(1 / alpha)
    return alpha * alpha * k + (1 - alpha * k) ** 2


def restricted_growth_strings(n: int) -> Iterator[tuple[int, ...]]:
    """All set partitions of ``range(n)`` as restricted growth strings.

    ``a[0] = 0`` and ``a[i] <= 1 + max(a[:i])``; yields Bell(n) strings in
    lexicographic order.
    """
    if n == 0:
        yield ()
        return
    a = [0] * n
    m = [0] * n  # m[i] = max(a[:i+1])
    while True:
        yield tuple(a)
        i = n - 1
        while i > 0 and a[i] > m[i - 1]:
            i -= 1
        if i == 0:
            return
        a[i] += 1
        m[i] = max(m[i - 1], a[i])
        for j in range(i + 1, n):
            a[j] = 0
            m[j] = m[i]
