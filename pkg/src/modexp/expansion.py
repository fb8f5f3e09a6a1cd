"""Exact edge-expansion constants by exhaustive subset enumeration.

Three constants are computed, each with a canonical witness set:

* conductance ``h``:        e(A, Ā) / min(vol A, vol Ā)
* expansion-by-products ``hh``: e(A, Ā) vol(G) / (vol A · vol Ā)
* expansion-by-edges ``hprime``: e(A, Ā) / min(e(A), e(Ā))

The scan runs over the ``2**(n-1) - 1`` masks that leave the highest vertex
outside, which covers every cut once. Values are screened in float64 chunk by
chunk and every near-minimal mask is then re-evaluated in exact rational
arithmetic, so the reported value and witness are exact. The witness is the
smallest bitmask among exact minimisers.
"""

from __future__ import annotations

import math
from collections.abc import Iterable, Iterator
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .errors import SizeLimitExceeded, TooFewVertices, ZeroVolumeSide
from .graph import Graph, as_ratio, from_mask, to_mask

DEFAULT_MAX_N = 26
INFINITY = math.inf
_CHUNK = 1 << 15
_REL_TOL = 1e-9

CONDUCTANCE = "conductance"
BY_PRODUCTS = "by-products"
BY_EDGES = "by-edges"


@dataclass(frozen=True)
class ExpansionReport:
    value: Fraction | float
    witness: frozenset[int]
    kind: str

    @property
    def is_infinite(self) -> bool:
        return self.value == INFINITY


def _check_proper(g: Graph, mask: int) -> None:
    if mask == 0 or mask == g.all_mask or mask >> g.n:
        raise ValueError("expected a non-empty proper subset of the vertices")


def h_set(g: Graph, a: Iterable[int]) -> Fraction:
    """Conductance of a single cut."""
    mask = to_mask(a)
    _check_proper(g, mask)
    va = g.int_volume(mask)
    vb = g.int_volume(g.all_mask & ~mask)
    if va == 0 or vb == 0:
        raise ZeroVolumeSide("a side of the cut has zero volume")
    return Fraction(g.int_cut(mask), min(va, vb))


def hh_set(g: Graph, a: Iterable[int]) -> Fraction:
    """Expansion-by-products of a single cut."""
    mask = to_mask(a)
    _check_proper(g, mask)
    va = g.int_volume(mask)
    vb = g.int_volume(g.all_mask & ~mask)
    if va == 0 or vb == 0:
        raise ZeroVolumeSide("a side of the cut has zero volume")
    return Fraction(g.int_cut(mask) * (va + vb), va * vb)


def hprime_set(g: Graph, a: Iterable[int]) -> Fraction | float:
    """Expansion-by-edges of a single cut; ``inf`` when a side has no internal edges."""
    mask = to_mask(a)
    _check_proper(g, mask)
    ea = g.int_internal(mask)
    eb = g.int_internal(g.all_mask & ~mask)
    low = min(ea, eb)
    if low == 0:
        return INFINITY
    return Fraction(g.int_cut(mask), low)


_EXACT = {CONDUCTANCE: h_set, BY_PRODUCTS: hh_set, BY_EDGES: hprime_set}


def _matrix(g: Graph, dtype):
    n = g.n
    w = np.zeros((n, n), dtype=dtype)
    for v, nbrs in enumerate(g.int_adjacency):
        for u, x in nbrs.items():
            w[v, u] = x
    return w


def subset_tables(g: Graph, max_n: int = DEFAULT_MAX_N, chunk: int = _CHUNK) -> Iterator[tuple]:
    """Yield ``(masks, vol, internal, cut)`` arrays over all masks ``1 .. 2**(n-1)-1``.

    Values are integers scaled by ``g.scale``. int64 is used while products of
    two volumes fit; otherwise arrays hold Python ints.
    """
    n = g.n
    if n < 2:
        raise TooFewVertices("need at least two vertices")
    if n > max_n:
        raise SizeLimitExceeded(n, max_n)
    total_vol = sum(g.int_degrees)
    dtype = np.int64 if total_vol < (1 << 30) else object
    w = _matrix(g, dtype)
    deg = np.array(g.int_degrees, dtype=dtype)
    loops = np.array(g.int_loops, dtype=dtype)
    shifts = np.arange(n, dtype=np.int64)
    stop = 1 << (n - 1)
    for start in range(1, stop, chunk):
        masks = np.arange(start, min(stop, start + chunk), dtype=np.int64)
        bits = ((masks[:, None] >> shifts) & 1).astype(dtype)
        vol = bits @ deg
        internal = ((bits @ w) * bits).sum(axis=1) // 2 + bits @ loops
        yield masks, vol, internal, vol - 2 * internal


def _float_keys(kind: str, vol, internal, cut, total_vol, total_int):
    vol = np.asarray(vol, dtype=float)
    cut = np.asarray(cut, dtype=float)
    other = total_vol - vol
    with np.errstate(divide="ignore", invalid="ignore"):
        if kind == CONDUCTANCE:
            return cut / np.minimum(vol, other)
        if kind == BY_PRODUCTS:
            return cut * total_vol / (vol * other)
        internal = np.asarray(internal, dtype=float)
        low = np.minimum(internal, total_int - internal - cut)
        keys = cut / low
        keys[low == 0] = np.inf
        return keys


def _minimize(g: Graph, kind: str, max_n: int) -> ExpansionReport:
    if kind != BY_EDGES and g.n >= 2 and g.has_isolated_vertices():
        raise ZeroVolumeSide(f"vertex {g.isolated_vertices()[0]} has zero degree")
    total_vol = float(sum(g.int_degrees))
    total_int = float(sum(g.int_degrees) // 2)
    best = np.inf
    cands: list[tuple[float, int]] = []
    first_inf: int | None = None
    for masks, vol, internal, cut in subset_tables(g, max_n):
        keys = _float_keys(kind, vol, internal, cut, total_vol, total_int)
        if first_inf is None and np.isinf(keys).any():
            first_inf = int(masks[np.argmax(np.isinf(keys))])
        finite = np.isfinite(keys)
        if not finite.any():
            continue
        cmin = float(keys[finite].min())
        best = min(best, cmin)
        threshold = best + _REL_TOL * max(1.0, abs(best))
        sel = np.nonzero(finite & (keys <= threshold))[0]
        cands = [c for c in cands if c[0] <= threshold]
        cands.extend((float(keys[i]), int(masks[i])) for i in sel)
    exact = _EXACT[kind]
    if not cands:
        return ExpansionReport(INFINITY, from_mask(first_inf or 1), kind)
    scored = [(exact(g, m), m) for _, m in cands]
    value = min(v for v, _ in scored)
    witness = min(m for v, m in scored if v == value)
    return ExpansionReport(value, from_mask(witness), kind)


def conductance(g: Graph, max_n: int = DEFAULT_MAX_N) -> ExpansionReport:
    """Cheeger constant ``h_G`` with its canonical minimising set."""
    return _minimize(g, CONDUCTANCE, max_n)


def expansion_by_products(g: Graph, max_n: int = DEFAULT_MAX_N) -> ExpansionReport:
    """``hh_G``; lies in [0, 2] and equals 2 only for K_2."""
    return _minimize(g, BY_PRODUCTS, max_n)


def expansion_by_edges(g: Graph, max_n: int = DEFAULT_MAX_N) -> ExpansionReport:
    """``h'_G``; ``inf`` when every cut has a side without internal edges (stars)."""
    return _minimize(g, BY_EDGES, max_n)


def is_delta_expander(g: Graph, delta, max_n: int = DEFAULT_MAX_N) -> bool:
    delta = as_ratio(delta)
    if delta <= 0:
        raise ValueError("delta must be positive")
    return conductance(g, max_n).value >= delta


def edges_from_conductance(h: Fraction) -> Fraction | float:
    """Convert conductance into expansion-by-edges: ``2h / (1 - h)``."""
    if h >= 1:
        return INFINITY
    return 2 * h / (1 - h)
