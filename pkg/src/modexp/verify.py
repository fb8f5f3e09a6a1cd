"""Seeded property suites cross-checking the library against itself.

Each suite returns a list of :class:`CheckResult`; a failing check carries
a serialized counterexample graph. All randomness comes from
:class:`~modexp.rng.SplitMix64` so results depend only on the seed.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .bounds import (
    BOUNDARY,
    NOT_SPLIT,
    SPLIT,
    classic_resolution_bound,
    detailed_upper_bound,
    resolution_verdict,
)
from .constructions import (
    clique_with_leaves,
    collapse_pendants,
    complete_graph,
    disjoint_copies,
    g_alpha,
    kary_depth2,
    path_graph,
    weighted_clique_loops,
    windmill,
    with_disjoint_edges,
)
from .decomposition import build_partition, split_non_expander, volume_decompose
from .errors import HypothesisViolated
from .expansion import conductance, expansion_by_products
from .graph import Graph, from_mask, serialize_edgelist
from .modularity import all_optimal, is_zero_modularity, maximize, score
from .rng import SplitMix64, planted_component_instance, random_connected_graph, random_graph, random_partition

SUITES = ("bounds", "zero-mod", "constructions", "decomposition", "resolution")


@dataclass(frozen=True)
class CheckResult:
    name: str
    ok: bool
    counterexample: str | None = None


def _fail(name: str, g: Graph, note: str = "") -> CheckResult:
    text = (f"# {note}\n" if note else "") + serialize_edgelist(g)
    return CheckResult(name, False, text)


def split_status(g: Graph, component, optima) -> set[bool]:
    """For each optimal partition: does it split ``component``?"""
    comp = frozenset(component)
    return {p.part_of(min(comp)) != comp for p in optima}


def verdict_matches_optima(g: Graph, component) -> bool:
    verdict = resolution_verdict(g, component)
    status = split_status(g, component, all_optimal(g).all_optimal)
    if verdict.decision == NOT_SPLIT:
        return status == {False}
    if verdict.decision == SPLIT:
        return status == {True}
    return status == {True, False}


def suite_bounds(rng: SplitMix64, samples: int) -> list[CheckResult]:
    bad_upper = bad_detailed = None
    for _ in range(samples):
        g = random_graph(rng, rng.randint(3, 8), 0.5)
        if g.num_edges == 0:
            continue
        q = maximize(g).q_star
        for s in g.connected_sets():
            if s.bit_count() > 6 or s.bit_count() < 2 or g.int_internal(s) == 0:
                continue
            h, _ = g.induced(s)
            alpha = h.num_edges / g.num_edges
            hh = expansion_by_products(h).value
            if q > 1 - alpha * min(hh, alpha):
                bad_upper = bad_upper or g
            p = random_partition(rng, g.n, 4)
            if detailed_upper_bound(g, from_mask(s), p) < score(g, p).q:
                bad_detailed = bad_detailed or g
    return [
        _fail("subgraph upper bound", bad_upper) if bad_upper else CheckResult("subgraph upper bound", True),
        _fail("partition upper bound", bad_detailed) if bad_detailed else CheckResult("partition upper bound", True),
    ]


def suite_zero_mod(rng: SplitMix64, samples: int) -> list[CheckResult]:
    disagree = weak = None
    for _ in range(samples):
        g = random_connected_graph(rng, rng.randint(2, 7), rng.random())
        answers = {m: is_zero_modularity(g, m) for m in ("direct", "geometric-mean", "products")}
        if len(set(answers.values())) != 1:
            disagree = disagree or g
        if answers["direct"] and conductance(g).value < Fraction(1, 2):
            weak = weak or g
    return [
        _fail("three criteria agree", disagree) if disagree else CheckResult("three criteria agree", True),
        _fail("zero modularity forces h >= 1/2", weak) if weak else CheckResult("zero modularity forces h >= 1/2", True),
    ]


def suite_constructions(rng: SplitMix64, samples: int) -> list[CheckResult]:
    out = []
    closed = True
    for k in range(2, 6):
        for a in (1, 2, 3):
            for b in (1, 2, 3):
                hw = weighted_clique_loops(a, b, k)
                if expansion_by_products(hw).value != Fraction(b, a + b) * (1 + Fraction(1, k - 1)):
                    closed = False
    out.append(CheckResult("weighted clique closed form", closed))
    equiv = True
    for k in (2, 3):
        for l in (1, 2):
            h = clique_with_leaves(k, l)
            hw = weighted_clique_loops(2 * l, k - 1, k)
            if collapse_pendants(h) != hw:
                equiv = False
            if expansion_by_products(h).value != expansion_by_products(hw).value:
                equiv = False
            for alpha in (Fraction(1, 2), Fraction(1)):
                if maximize(with_disjoint_edges(h, alpha)).q_star != maximize(with_disjoint_edges(hw, alpha)).q_star:
                    equiv = False
    out.append(CheckResult("leaves versus loops", equiv))
    out.append(CheckResult("windmill conductance", all(conductance(windmill(l)).value == Fraction(1, 2) for l in (2, 3, 4))))
    counts = True
    for _ in range(samples):
        alpha = Fraction(rng.randint(1, 9), 10)
        m = rng.randint(10, 120)
        try:
            g = g_alpha(alpha, m)
        except ValueError:
            continue
        if g.num_edges != m or g != g_alpha(alpha, m):
            counts = False
    out.append(CheckResult("g_alpha edge count and determinism", counts))
    return out


def _expander_confirmed(g: Graph, err: HypothesisViolated, delta: Fraction) -> bool:
    """The offending set, minus vertices isolated inside it, must be a delta-expander."""
    h, _ = g.induced(err.vertices)
    h, _ = h.without_isolated()
    return h.n >= 2 and conductance(h).value >= delta


def suite_decomposition(rng: SplitMix64, samples: int) -> list[CheckResult]:
    tri = disjoint_copies(complete_graph(3), 4)
    corpus = [tri] + [path_graph(n) for n in range(5, 13)] + [g_alpha(Fraction(1, 2), 20), kary_depth2(4)]
    results = []
    ok = True
    for g in corpus:
        for alpha, delta in ((Fraction(1, 4), Fraction(1, 2)), (Fraction(1, 2), Fraction(1, 3))):
            try:
                build_partition(g, alpha, delta)
                split_non_expander(g, alpha * g.num_edges, delta)
            except HypothesisViolated as err:
                ok = ok and _expander_confirmed(g, err, delta)
            except AssertionError:
                results.append(_fail("corpus guarantees", g))
                ok = None
                break
        if ok is None:
            break
    if ok is not None:
        results.append(CheckResult("corpus guarantees", ok))
    spurious = None
    for _ in range(samples):
        g = random_connected_graph(rng, rng.randint(3, 9), rng.random() * 0.6)
        alpha = Fraction(rng.randint(1, 4), 4)
        delta = Fraction(rng.randint(1, 4), 5)
        try:
            build_partition(g, alpha, delta)
        except HypothesisViolated as err:
            if not _expander_confirmed(g, err, delta):
                spurious = spurious or g
        except AssertionError:
            spurious = spurious or g
        try:
            volume_decompose(g, Fraction(1, 2), delta)
        except HypothesisViolated:
            pass
        except AssertionError:
            spurious = spurious or g
    results.append(_fail("random runs", spurious) if spurious else CheckResult("random runs", True))
    return results


def resolution_instances() -> list[tuple[Fraction, Graph]]:
    h = clique_with_leaves(3, 2)
    return [(alpha, with_disjoint_edges(h, alpha)) for alpha in (Fraction(1, 4), Fraction(1, 2), Fraction(3, 4))]


def suite_resolution(rng: SplitMix64, samples: int) -> list[CheckResult]:
    results = []
    expected = {Fraction(1, 4): NOT_SPLIT, Fraction(1, 2): BOUNDARY, Fraction(3, 4): SPLIT}
    for alpha, g in resolution_instances():
        comp = range(9)
        ok = resolution_verdict(g, comp).decision == expected[alpha] and verdict_matches_optima(g, comp)
        name = f"clique with leaves at alpha {alpha}"
        results.append(CheckResult(name, True) if ok else _fail(name, g))
    bad = None
    for _ in range(samples):
        g, comp = planted_component_instance(rng)
        verdict = resolution_verdict(g, comp)
        if classic_resolution_bound(g, comp) and verdict.decision != NOT_SPLIT:
            bad = bad or g
        if not verdict_matches_optima(g, comp):
            bad = bad or g
    results.append(_fail("planted components", bad) if bad else CheckResult("planted components", True))
    return results


_RUNNERS = {
    "bounds": suite_bounds,
    "zero-mod": suite_zero_mod,
    "constructions": suite_constructions,
    "decomposition": suite_decomposition,
    "resolution": suite_resolution,
}


def run_suite(name: str, seed: int = 0, samples: int = 20) -> list[CheckResult]:
    names = SUITES if name == "all" else (name,)
    out = []
    for n in names:
        if n not in _RUNNERS:
            raise ValueError(f"unknown suite {n!r}")
        for r in _RUNNERS[n](SplitMix64(seed), samples):
            out.append(CheckResult(f"{n}: {r.name}", r.ok, r.counterexample))
    return out


__all__ = ["CheckResult", "SUITES", "run_suite", "split_status", "verdict_matches_optima", "resolution_instances"]
