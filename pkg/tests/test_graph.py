from __future__ import annotations

from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

import oracles
from modexp.constructions import clique_with_leaves, complete_graph, weighted_clique_loops, windmill, with_disjoint_edges
from modexp.errors import EdgeListSyntaxError, EmptySet, NonPositiveWeight, PartitionMismatch, VertexOutOfRange
from modexp.graph import Graph, Partition, boundary, max_in, max_out, parse_edgelist, serialize_edgelist
from strategies import graph_and_partition, graphs

K2 = Graph(2, [(0, 1, 1)])


class TestPrimitives:
    def test_volume_examples(self):
        assert K2.volume({0}) == 1
        assert weighted_clique_loops(1, 1, 3).volume({0}) == 2
        assert windmill(2).volume({0}) == 4
        assert K2.volume(set()) == 0

    def test_internal_examples(self):
        assert complete_graph(3).internal_edges(range(3)) == 3
        assert weighted_clique_loops(1, 1, 3).internal_edges({0}) == Fraction(1, 2)
        assert windmill(2).internal_edges({1, 2}) == 1

    def test_cut_examples(self):
        assert K2.cut({0}) == 1
        assert windmill(2).cut({1, 2}) == 2

    def test_loop_counts_twice_in_degree(self):
        g = parse_edgelist("p 1\ne 0 0 1/2\n")
        assert g.degrees == (Fraction(1),)
        assert g.num_edges == Fraction(1, 2)
        assert g.cut({0}) == 0

    def test_parallel_edges_sum(self):
        g = Graph(2, [(0, 1, 1), (1, 0, Fraction(1, 2))])
        assert g.cut({0}) == Fraction(3, 2)
        assert len(g.edges) == 2

    def test_edges_between(self):
        g = windmill(2)
        assert g.edges_between({0}, {1, 2}) == 2
        with pytest.raises(ValueError):
            g.edges_between({0, 1}, {1})

    def test_vertex_out_of_range(self):
        with pytest.raises(VertexOutOfRange):
            K2.volume({5})
        with pytest.raises(VertexOutOfRange):
            Graph(2, [(0, 2, 1)])

    def test_nonpositive_weight(self):
        with pytest.raises(NonPositiveWeight):
            Graph(2, [(0, 1, 0)])


class TestStructure:
    def test_components(self):
        g = complete_graph(3).disjoint_union(complete_graph(3))
        assert [len(c) for c in g.components()] == [3, 3]
        g = with_disjoint_edges(clique_with_leaves(3, 2), Fraction(1, 2))
        sizes = [len(c) for c in g.components()]
        assert sizes == [9] + [2] * 9
        assert windmill(3).is_connected()

    def test_isolated_vertices_are_singletons(self):
        g = Graph(3, [(0, 1, 1)])
        assert g.components() == [frozenset({0, 1}), frozenset({2})]
        assert g.isolated_vertices() == [2]

    def test_induced(self):
        h, keep = complete_graph(4).induced({0, 2, 3})
        assert h == complete_graph(3) and keep == (0, 2, 3)
        h, _ = clique_with_leaves(3, 2).induced({0, 3, 4})
        assert h.num_edges == 2 and sorted(h.degrees) == [1, 1, 2]
        h, _ = windmill(2).induced({1, 2, 3, 4})
        assert h.num_edges == 2 and h.component_masks() == (0b0011, 0b1100)
        with pytest.raises(EmptySet):
            K2.induced(set())

    def test_connected_subsets_match_filter(self):
        g = windmill(2)
        got = sorted(g.connected_sets())
        want = [m for m in range(1, 1 << g.n) if g.is_connected_set(m)]
        assert got == want


class TestFormat:
    def test_parse_examples(self):
        assert parse_edgelist("p 2\ne 0 1 1") == K2
        assert parse_edgelist("# c\np 2\ne 0 1\n") == K2
        with pytest.raises(EdgeListSyntaxError) as err:
            parse_edgelist("p 2\ne 0\n")
        assert err.value.lineno == 2

    @pytest.mark.parametrize(
        "text",
        ["e 0 1 1\np 2\n", "p 2\np 2\n", "p x\n", "q 1\n", "p 2\ne 0 1 a\n", "", "p 2\ne 0 1 1/0\n"],
    )
    def test_malformed(self, text):
        with pytest.raises(EdgeListSyntaxError):
            parse_edgelist(text)

    def test_bad_values(self):
        with pytest.raises(NonPositiveWeight):
            parse_edgelist("p 2\ne 0 1 -1\n")
        with pytest.raises(VertexOutOfRange):
            parse_edgelist("p 2\ne 0 2 1\n")

    def test_serialize_sorted_lowest_terms(self):
        g = Graph(3, [(2, 1, Fraction(2, 4)), (0, 0, 3)])
        assert serialize_edgelist(g) == "p 3\ne 0 0 3\ne 1 2 1/2\n"

    @given(graphs())
    def test_round_trip(self, g):
        text = serialize_edgelist(g)
        assert parse_edgelist(text) == g
        assert serialize_edgelist(parse_edgelist(text)) == text


class TestPartition:
    def test_validation(self):
        with pytest.raises(ValueError):
            Partition.from_parts([[0, 1], [1, 2]])
        with pytest.raises(ValueError):
            Partition.from_parts([[0], []])
        with pytest.raises(PartitionMismatch):
            Partition.from_parts([[0]]).check_covers(2)

    def test_labels_round_trip(self):
        p = Partition.from_labels([1, 0, 1, 2])
        assert p.parts == (frozenset({0, 2}), frozenset({1}), frozenset({3}))
        assert Partition.from_labels(p.labels()) == p

    def test_boundary_max_in_out(self):
        g = windmill(2)
        p = Partition.from_parts([[0], [1, 2], [3, 4]])
        assert boundary(g, p) == 4
        assert max_in(g, p) == 1
        assert max_out(g, p) == 4


@given(graph_and_partition())
def test_identities(gp):
    g, p = gp
    total = g.num_edges
    assert g.total_volume == 2 * total
    for part in p:
        rest = g.complement(part)
        assert g.volume(part) + g.volume(rest) == g.total_volume
        assert g.internal_edges(part) + g.internal_edges(rest) + g.cut(part) == total
        assert g.cut(part) == g.cut(rest)
        assert g.volume(part) == 2 * g.internal_edges(part) + g.cut(part)
        assert g.volume(part) == oracles.vol(g, part)
        assert g.internal_edges(part) == oracles.internal(g, part)


@given(graphs())
def test_components_partition_vertices(g):
    comps = g.components()
    assert sorted(v for c in comps for v in c) == list(range(g.n))
    assert [min(c) for c in comps] == sorted(min(c) for c in comps)
    for c in comps:
        assert g.cut(c) == 0
        assert g.is_connected_set(c)


@settings(max_examples=50)
@given(graphs(max_n=6), st.integers(0, 63))
def test_induced_matches_oracle(g, raw):
    mask = raw & g.all_mask
    if not mask:
        return
    h, keep = g.induced(mask)
    assert h.num_edges == oracles.internal(g, keep)
