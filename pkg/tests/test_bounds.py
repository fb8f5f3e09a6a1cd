from __future__ import annotations

from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

import oracles
from modexp.bounds import (
    BOUNDARY,
    NOT_SPLIT,
    SPLIT,
    ceil_log2_inverse,
    classic_resolution_bound,
    detailed_upper_bound,
    lower_bound_no_expanders,
    lower_bound_volume,
    partial_score,
    resolution_verdict,
    spectral_upper_bound,
    upper_bound_subgraph,
    zero_component_unsplit,
)
from modexp.constructions import (
    clique_with_leaves,
    complete_graph,
    cycle_graph,
    g_alpha,
    g_w,
    weighted_clique_loops,
    windmill,
    with_disjoint_edges,
)
from modexp.errors import (
    Disconnected,
    EdgelessSubgraph,
    IsolatedVerticesPresent,
    NotAComponent,
    NotAComponentUnion,
    OutOfRange,
)
from modexp.expansion import expansion_by_products
from modexp.graph import Graph, Partition
from modexp.modularity import all_optimal, f_of_alpha, maximize, score
from strategies import connected_graphs, graphs, partitions

H32 = clique_with_leaves(3, 2)


def test_ceil_log2_inverse():
    assert [ceil_log2_inverse(Fraction(1, d)) for d in (1, 2, 3, 4, 5, 8, 9)] == [0, 1, 2, 2, 3, 3, 4]
    assert ceil_log2_inverse(Fraction(3, 4)) == 1
    with pytest.raises(OutOfRange):
        ceil_log2_inverse(0)


class TestUpperBounds:
    def test_k2(self):
        rep = upper_bound_subgraph(complete_graph(2), {0, 1})
        assert rep.bound == 0
        assert rep.ingredients == {"alpha": 1, "hh": 2}

    def test_windmill(self):
        g = windmill(2)
        rep = upper_bound_subgraph(g, range(5))
        assert rep.bound == Fraction(1, 4)
        assert rep.bound >= maximize(g).q_star

    def test_weighted_clique_host(self):
        g = g_w(weighted_clique_loops(1, 1, 3), Fraction(1, 2))
        rep = upper_bound_subgraph(g, range(3))
        alpha = rep.ingredients["alpha"]
        assert rep.ingredients["hh"] == Fraction(3, 4)
        assert rep.bound == 1 - alpha * min(Fraction(3, 4), alpha)

    def test_edgeless(self):
        with pytest.raises(EdgelessSubgraph):
            upper_bound_subgraph(windmill(2), {1, 3})

    def test_detailed_trivial(self):
        g = windmill(2)
        assert detailed_upper_bound(g, range(5), Partition.trivial(5)) == 0

    def test_detailed_windmill(self):
        g = windmill(2)
        p = Partition.from_parts([[1, 2], [0, 3, 4]])
        rhs = detailed_upper_bound(g, range(5), p)
        hh = Fraction(3, 4)
        x = Fraction(4, 12)
        assert rhs == 1 - hh + (hh - 1) * (x * x + (1 - x) ** 2)
        assert rhs >= score(g, p).q

    def test_spectral(self):
        assert spectral_upper_bound(complete_graph(4), range(4)) == pytest.approx(1 / 3, abs=1e-9)
        assert spectral_upper_bound(complete_graph(2), range(2)) == pytest.approx(1.0, abs=1e-9)
        assert spectral_upper_bound(cycle_graph(4), range(4)) == pytest.approx(1.0, abs=1e-9)
        with pytest.raises(Disconnected):
            spectral_upper_bound(windmill(2), {0, 1, 3, 4, 2} - {0})


class TestLowerBounds:
    def test_no_expanders(self):
        assert lower_bound_no_expanders(1, Fraction(1, 100)) == 0
        a, d = Fraction(1, 4), Fraction(1, 100)
        assert lower_bound_no_expanders(a, d) == 1 - oracles.f_alpha(a + Fraction(3, 200)) - Fraction(3, 2) * d * 2
        assert lower_bound_no_expanders(Fraction(1, 2), 0) == Fraction(1, 2)
        with pytest.raises(OutOfRange):
            lower_bound_no_expanders(0, Fraction(1, 2))

    def test_volume(self):
        assert lower_bound_volume(1, Fraction(3, 7)) == 0
        assert lower_bound_volume(Fraction(1, 2), Fraction(1, 10)) == Fraction(3, 10)
        assert lower_bound_volume(Fraction(1, 4), Fraction(1, 20)) == Fraction(11, 20)
        with pytest.raises(OutOfRange):
            lower_bound_volume(Fraction(1, 2), 2)

    @given(st.fractions(Fraction(1, 40), 1), st.fractions(0, 1))
    def test_no_expanders_formula(self, a, d):
        cap = min(Fraction(1), a + Fraction(3, 2) * d)
        k = 0
        while Fraction(1, 2**k) > a:
            k += 1
        assert lower_bound_no_expanders(a, d) == 1 - oracles.f_alpha(cap) - Fraction(3, 2) * d * k


class TestPartialScore:
    def test_one_part(self):
        g = with_disjoint_edges(H32, Fraction(1, 2))
        h = frozenset(range(9))
        alpha = Fraction(1, 2)
        assert partial_score(g, h, Partition.from_parts([h])) == alpha - alpha**2

    def test_witness_bipartition(self):
        g = with_disjoint_edges(H32, Fraction(1, 4))
        h = frozenset(range(9))
        hh_rep = expansion_by_products(H32)
        u = hh_rep.witness
        alpha = Fraction(1, 4)
        x = H32.volume(u) / H32.total_volume
        hh = hh_rep.value
        want = alpha - alpha * hh + alpha * (hh - alpha) * (x * x + (1 - x) ** 2)
        assert partial_score(g, h, Partition.from_parts([u, h - u])) == want

    def test_singletons_of_k2(self):
        assert partial_score(complete_graph(2), {0, 1}, Partition.singletons(2)) == Fraction(-1, 2)

    def test_errors(self):
        g = windmill(2).disjoint_union(complete_graph(2))
        with pytest.raises(NotAComponentUnion):
            partial_score(g, {0, 1}, Partition.from_parts([[0, 1]]))
        with pytest.raises(NotAComponentUnion):
            partial_score(g, {5, 6}, Partition.from_parts([[5]]))


class TestVerdict:
    @pytest.mark.parametrize(
        "alpha, extra, decision",
        [(Fraction(1, 4), 27, NOT_SPLIT), (Fraction(1, 2), 9, BOUNDARY), (Fraction(3, 4), 3, SPLIT)],
    )
    def test_trichotomy(self, alpha, extra, decision):
        g = with_disjoint_edges(H32, alpha)
        assert g.num_edges == 9 + extra
        v = resolution_verdict(g, range(9))
        assert (v.decision, v.alpha, v.hh_component) == (decision, alpha, Fraction(1, 2))
        status = {p.part_of(0) != frozenset(range(9)) for p in all_optimal(g).all_optimal}
        assert status == {NOT_SPLIT: {False}, SPLIT: {True}, BOUNDARY: {False, True}}[decision]

    def test_boundary_witnesses_are_optimal(self):
        g = with_disjoint_edges(H32, Fraction(1, 2))
        v = resolution_verdict(g, range(9))
        opt = all_optimal(g)
        assert v.witness_unsplit in opt.all_optimal
        assert v.witness_split in opt.all_optimal
        assert score(g, v.witness_split).q == score(g, v.witness_unsplit).q == opt.q_star

    def test_errors(self):
        g = with_disjoint_edges(H32, Fraction(1, 2))
        with pytest.raises(NotAComponent):
            resolution_verdict(g, range(8))
        with pytest.raises(IsolatedVerticesPresent):
            resolution_verdict(Graph(4, [(0, 1, 1)]), {0, 1})

    def test_classic(self):
        tri_host = complete_graph(3).with_disjoint_edges(7)
        assert classic_resolution_bound(tri_host, range(3))
        assert not classic_resolution_bound(with_disjoint_edges(H32, Fraction(1, 2)), range(9))
        assert classic_resolution_bound(complete_graph(2).with_disjoint_edges(2), {0, 1})
        assert resolution_verdict(tri_host, range(3)).decision == NOT_SPLIT

    def test_zero_component(self):
        g = g_alpha(Fraction(1, 2), 20)
        for comp in g.components():
            assert zero_component_unsplit(g, comp)
        w = windmill(2).with_disjoint_edges(20)
        assert not zero_component_unsplit(w, range(5))
        assert zero_component_unsplit(complete_graph(2).with_disjoint_edges(4), {0, 1})
        assert resolution_verdict(w, range(5)).decision == NOT_SPLIT
        with pytest.raises(ValueError):
            zero_component_unsplit(complete_graph(3), range(3))

    def test_zero_component_methods_agree(self):
        g = g_alpha(Fraction(1, 2), 20)
        for method in ("direct", "geometric-mean", "products"):
            assert zero_component_unsplit(g, range(4), method=method)


@settings(max_examples=40, deadline=None)
@given(connected_graphs(max_n=6, weighted=False))
def test_hh_at_least_two_over_edges(h):
    assert expansion_by_products(h).value >= 2 / h.num_edges


@settings(max_examples=40, deadline=None)
@given(graphs(min_n=2, max_n=7, min_edges=1), st.data())
def test_upper_bounds_sound(g, data):
    q = maximize(g).q_star
    p = data.draw(partitions(g.n))
    qp = score(g, p).q
    for s in g.connected_sets():
        if s.bit_count() < 2 or g.int_internal(s) == 0:
            continue
        assert q <= upper_bound_subgraph(g, s).bound
        assert qp <= detailed_upper_bound(g, s, p)


@settings(max_examples=40, deadline=None)
@given(connected_graphs(min_n=2, max_n=5), st.integers(1, 8), st.data())
def test_split_penalty(h, pad, data):
    g = h.with_disjoint_edges(pad)
    comp = frozenset(range(h.n))
    alpha = h.num_edges / g.num_edges
    hh = expansion_by_products(h).value
    b = data.draw(partitions(h.n))
    if len(b) < 2:
        return
    conn = partial_score(g, comp, Partition.from_parts([comp]))
    vol_h = h.total_volume
    sq = sum((h.volume(part) ** 2 for part in b), Fraction(0)) / vol_h**2
    assert conn - partial_score(g, comp, b) >= alpha * (hh - alpha) * (1 - sq)


@settings(max_examples=40, deadline=None)
@given(connected_graphs(min_n=2, max_n=5), st.integers(1, 6))
def test_implication_chain(h, pad):
    g = h.with_disjoint_edges(pad)
    comp = range(h.n)
    v = resolution_verdict(g, comp)
    # the size rule needs every cut to weigh at least 1
    heavy = all(w >= 1 for u, x, w in h.edges if u != x)
    if heavy and classic_resolution_bound(g, comp):
        assert v.decision != SPLIT
    if zero_component_unsplit(g, comp, verify=False):
        assert v.decision == NOT_SPLIT
    assert v.decision == (SPLIT if v.alpha > v.hh_component else NOT_SPLIT if v.alpha < v.hh_component else BOUNDARY)
