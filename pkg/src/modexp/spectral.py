"""Normalized-Laplacian spectrum and spectral gap.

The eigenvalues come from a cyclic Jacobi (plane rotation) diagonalisation,
which is plenty for desk-scale dense matrices and keeps the solver
self-contained. A loop of weight ``w`` sits on the adjacency diagonal as
``2w`` so that row sums equal the weighted degrees.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import Disconnected, TooFewVertices, ZeroDegreeVertex
from .graph import Graph

JACOBI_TOL = 1e-10
JACOBI_MAX_SWEEPS = 100


@dataclass(frozen=True)
class SpectralReport:
    eigenvalues: tuple[float, ...]
    gap: float
    tolerance: float


def jacobi_eigenvalues(matrix, tol: float = JACOBI_TOL, max_sweeps: int = JACOBI_MAX_SWEEPS) -> np.ndarray:
    """Eigenvalues of a real symmetric matrix, sorted ascending.

    Sweeps over all pairs ``p < q`` annihilating ``a[p, q]`` until the
    off-diagonal Frobenius norm drops below ``tol``.
    """
    a = np.array(matrix, dtype=float, copy=True)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise ValueError("expected a square matrix")
    if not np.allclose(a, a.T, atol=1e-12):
        raise ValueError("matrix is not symmetric")
    n = a.shape[0]
    for _ in range(max_sweeps):
        off = math.sqrt(max(0.0, float(np.sum(a * a) - np.sum(np.diag(a) ** 2))))
        if off < tol:
            break
        for p in range(n - 1):
            for q in range(p + 1, n):
                apq = a[p, q]
                if abs(apq) < 1e-300:
                    continue
                theta = (a[q, q] - a[p, p]) / (2.0 * apq)
                if abs(theta) > 1e150:
                    t = 0.5 / theta
                else:
                    t = math.copysign(1.0, theta) / (abs(theta) + math.sqrt(theta * theta + 1.0))
                c = 1.0 / math.sqrt(t * t + 1.0)
                s = t * c
                col_p = a[:, p].copy()
                col_q = a[:, q].copy()
                a[:, p] = c * col_p - s * col_q
                a[:, q] = s * col_p + c * col_q
                row_p = a[p, :].copy()
                row_q = a[q, :].copy()
                a[p, :] = c * row_p - s * row_q
                a[q, :] = s * row_p + c * row_q
    return np.sort(np.diag(a))


def normalized_laplacian(g: Graph) -> np.ndarray:
    n = g.n
    adj = np.zeros((n, n))
    for v, nbrs in enumerate(g.adjacency):
        for u, w in nbrs.items():
            adj[v, u] = float(w)
        adj[v, v] = 2.0 * float(g.loops[v])
    deg = np.array([float(d) for d in g.degrees])
    if np.any(deg == 0):
        raise ZeroDegreeVertex(f"vertex {int(np.argmax(deg == 0))} has zero degree")
    inv_sqrt = 1.0 / np.sqrt(deg)
    return np.eye(n) - inv_sqrt[:, None] * adj * inv_sqrt[None, :]


def spectral_gap(g: Graph, tol: float = JACOBI_TOL) -> SpectralReport:
    """``max_{i != 0} |1 - lambda_i|`` over normalized-Laplacian eigenvalues.

    ``lambda_0`` is taken to be the eigenvalue closest to zero.
    """
    if g.n < 2:
        raise TooFewVertices("spectral gap needs at least two vertices")
    if g.has_isolated_vertices():
        raise ZeroDegreeVertex(f"vertex {g.isolated_vertices()[0]} has zero degree")
    if not g.is_connected():
        raise Disconnected("spectral gap is defined here for connected graphs only")
    eig = jacobi_eigenvalues(normalized_laplacian(g), tol=tol)
    zero = int(np.argmin(np.abs(eig)))
    rest = np.delete(eig, zero)
    gap = float(np.max(np.abs(1.0 - rest)))
    return SpectralReport(tuple(float(x) for x in eig), gap, tol)
