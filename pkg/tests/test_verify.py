from __future__ import annotations

import pytest

from modexp.constructions import clique_with_leaves, complete_graph, with_disjoint_edges
from modexp.verify import SUITES, run_suite, split_status, verdict_matches_optima
from modexp.modularity import all_optimal


@pytest.mark.parametrize("suite", SUITES)
def test_suites_pass(suite):
    results = run_suite(suite, seed=11, samples=15)
    assert results
    assert all(r.ok for r in results), [r.name for r in results if not r.ok]
    assert all(r.name.startswith(suite + ": ") for r in results)


def test_unknown_suite():
    with pytest.raises(ValueError):
        run_suite("nope")


def test_all_runs_every_suite():
    names = {r.name.split(":")[0] for r in run_suite("all", samples=3)}
    assert names == set(SUITES)


def test_split_status_on_padded_triangle():
    g = complete_graph(3).with_disjoint_edges(3)
    assert split_status(g, range(3), all_optimal(g).all_optimal) == {False}
    assert verdict_matches_optima(g, range(3))


def test_verdict_matches_on_boundary_instance():
    g = with_disjoint_edges(clique_with_leaves(3, 2), "1/2")
    assert verdict_matches_optima(g, range(9))
