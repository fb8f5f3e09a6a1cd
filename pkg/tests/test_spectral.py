from __future__ import annotations

import numpy as np
import pytest
from hypothesis import given, settings

import oracles
from modexp.constructions import complete_graph, cycle_graph, path_graph, weighted_clique_loops
from modexp.errors import Disconnected, TooFewVertices, ZeroDegreeVertex
from modexp.expansion import expansion_by_products
from modexp.graph import Graph
from modexp.spectral import jacobi_eigenvalues, normalized_laplacian, spectral_gap
from strategies import connected_graphs


def test_known_gaps():
    assert spectral_gap(complete_graph(4)).gap == pytest.approx(1 / 3, abs=1e-9)
    assert spectral_gap(cycle_graph(4)).gap == pytest.approx(1.0, abs=1e-9)
    assert spectral_gap(complete_graph(2)).gap == pytest.approx(1.0, abs=1e-9)


def test_loops_on_diagonal():
    g = weighted_clique_loops(1, 1, 3)
    lap = normalized_laplacian(g)
    assert np.allclose(np.diag(lap), 0.5)


def test_jacobi_matches_numpy():
    rng = np.random.default_rng(3)
    a = rng.normal(size=(7, 7))
    a = a + a.T
    assert np.allclose(jacobi_eigenvalues(a), np.linalg.eigvalsh(a), atol=1e-9)


def test_jacobi_rejects_asymmetric():
    with pytest.raises(ValueError):
        jacobi_eigenvalues([[0, 1], [0, 0]])


def test_errors():
    with pytest.raises(TooFewVertices):
        spectral_gap(Graph(1, [(0, 0, 1)]))
    with pytest.raises(ZeroDegreeVertex):
        spectral_gap(Graph(3, [(0, 1, 1)]))
    with pytest.raises(Disconnected):
        spectral_gap(complete_graph(3).disjoint_union(complete_graph(3)))


def test_report_fields():
    rep = spectral_gap(path_graph(4))
    assert len(rep.eigenvalues) == 4
    assert min(abs(x) for x in rep.eigenvalues) < 1e-9
    assert rep.tolerance == 1e-10


@settings(max_examples=40, deadline=None)
@given(connected_graphs(max_n=8))
def test_gap_matches_numpy_and_mixing(g):
    gap = spectral_gap(g).gap
    assert gap == pytest.approx(oracles.jacobi_free_gap(g), abs=1e-8)
    assert float(expansion_by_products(g).value) >= 1 - gap - 1e-8
