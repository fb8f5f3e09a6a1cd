"""Weighted multigraphs with loops, vertex sets, partitions and edge-list I/O.

Vertices are the integers ``0..n-1``. Edge weights are stored as
:class:`fractions.Fraction` so every derived quantity is exact. A loop at
``v`` of weight ``w`` contributes ``2w`` to the degree of ``v`` but only
``w`` to the edge count of any set containing ``v``.

Vertex sets are passed around as any iterable of ints; internally (and in the
exhaustive searches) they are bitmasks with bit ``v`` standing for vertex
``v``. :func:`to_mask` and :func:`from_mask` convert between the two.
"""

from __future__ import annotations

import math
from collections.abc import Iterable, Iterator, Sequence
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from pathlib import Path

from .errors import (
    EdgeListSyntaxError,
    EmptySet,
    NonPositiveWeight,
    PartitionMismatch,
    VertexOutOfRange,
)

Ratio = Fraction
Edge = tuple[int, int, Fraction]


def to_mask(vertices: Iterable[int] | int) -> int:
    if isinstance(vertices, int):
        return vertices
    mask = 0
    for v in vertices:
        mask |= 1 << v
    return mask


def from_mask(mask: int) -> frozenset[int]:
    out = []
    v = 0
    while mask:
        if mask & 1:
            out.append(v)
        mask >>= 1
        v += 1
    return frozenset(out)


def mask_bits(mask: int) -> list[int]:
    """Vertices of ``mask`` in increasing order."""
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return out


def as_ratio(value) -> Fraction:
    if isinstance(value, Fraction):
        return value
    if isinstance(value, float):
        # floats are accepted only when they are exact binary fractions
        return Fraction(value)
    return Fraction(value)


class Graph:
    """Immutable weighted multigraph with loops.

    Parallel edges are kept as given; every primitive sums their weights, so
    a multigraph behaves exactly like its merged simple-with-weights version.

    >>> g = Graph(2, [(0, 1, 1)])
    >>> g.volume({0}), g.num_edges
    (Fraction(1, 1), Fraction(1, 1))
    """

    def __init__(self, n: int, edges: Iterable[tuple] = ()) -> None:
        if n < 0:
            raise ValueError("vertex count must be non-negative")
        norm: list[Edge] = []
        for edge in edges:
            if len(edge) == 2:
                u, v = edge
                w = Fraction(1)
            else:
                u, v, w = edge
                w = as_ratio(w)
            u, v = int(u), int(v)
            if not (0 <= u < n and 0 <= v < n):
                raise VertexOutOfRange(f"edge ({u}, {v}) outside vertex range 0..{n - 1}")
            if w <= 0:
                raise NonPositiveWeight(f"edge ({u}, {v}) has weight {w}")
            if u > v:
                u, v = v, u
            norm.append((u, v, w))
        self._n = n
        self._edges = tuple(norm)

    # -- basic accessors -------------------------------------------------

    @property
    def n(self) -> int:
        return self._n

    @property
    def edges(self) -> tuple[Edge, ...]:
        return self._edges

    def __repr__(self) -> str:
        return f"Graph(n={self._n}, edges={len(self._edges)}, e={self.num_edges})"

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self._n == other._n and sorted(self._edges) == sorted(other._edges)

    def __hash__(self) -> int:
        return hash((self._n, tuple(sorted(self._edges))))

    @cached_property
    def loops(self) -> tuple[Fraction, ...]:
        out = [Fraction(0)] * self._n
        for u, v, w in self._edges:
            if u == v:
                out[u] += w
        return tuple(out)

    @cached_property
    def adjacency(self) -> tuple[dict[int, Fraction], ...]:
        """Merged non-loop neighbour weights, one dict per vertex."""
        adj: list[dict[int, Fraction]] = [{} for _ in range(self._n)]
        for u, v, w in self._edges:
            if u != v:
                adj[u][v] = adj[u].get(v, 0) + w
                adj[v][u] = adj[v].get(u, 0) + w
        return tuple(adj)

    @cached_property
    def neighbor_masks(self) -> tuple[int, ...]:
        return tuple(to_mask(a) for a in self.adjacency)

    @cached_property
    def degrees(self) -> tuple[Fraction, ...]:
        return tuple(sum(a.values(), Fraction(0)) + 2 * lp for a, lp in zip(self.adjacency, self.loops))

    @cached_property
    def num_edges(self) -> Fraction:
        """``e(G)``: total edge weight, each loop counted once."""
        return sum((w for _, _, w in self._edges), Fraction(0))

    @cached_property
    def total_volume(self) -> Fraction:
        return sum(self.degrees, Fraction(0))

    @cached_property
    def scale(self) -> int:
        """Least common denominator of all weights."""
        return math.lcm(1, *(w.denominator for _, _, w in self._edges))

    @cached_property
    def int_adjacency(self) -> tuple[dict[int, int], ...]:
        s = self.scale
        return tuple({u: int(w * s) for u, w in a.items()} for a in self.adjacency)

    @cached_property
    def int_loops(self) -> tuple[int, ...]:
        s = self.scale
        return tuple(int(lp * s) for lp in self.loops)

    @cached_property
    def int_degrees(self) -> tuple[int, ...]:
        s = self.scale
        return tuple(int(d * s) for d in self.degrees)

    # -- set primitives --------------------------------------------------

    def _mask(self, s: Iterable[int] | int) -> int:
        mask = to_mask(s)
        if mask >> self._n:
            raise VertexOutOfRange(f"vertex set {sorted(from_mask(mask))} not inside 0..{self._n - 1}")
        return mask

    def int_volume(self, mask: int) -> int:
        deg = self.int_degrees
        return sum(deg[v] for v in mask_bits(mask))

    def int_internal(self, mask: int) -> int:
        adj = self.int_adjacency
        loops = self.int_loops
        twice = 0
        for v in mask_bits(mask):
            twice += 2 * loops[v]
            for u, w in adj[v].items():
                if mask >> u & 1:
                    twice += w
        return twice // 2

    def int_cut(self, mask: int) -> int:
        return self.int_volume(mask) - 2 * self.int_internal(mask)

    def volume(self, s: Iterable[int] | int) -> Fraction:
        """Sum of degrees over ``s`` (loops count twice)."""
        return Fraction(self.int_volume(self._mask(s)), self.scale)

    def internal_edges(self, s: Iterable[int] | int) -> Fraction:
        """``e(S)``: weight of edges with both ends in ``s``; loops count once."""
        return Fraction(self.int_internal(self._mask(s)), self.scale)

    def cut(self, s: Iterable[int] | int) -> Fraction:
        """``e(S, V \\ S)``; loops never cross."""
        return Fraction(self.int_cut(self._mask(s)), self.scale)

    def edges_between(self, s: Iterable[int] | int, t: Iterable[int] | int) -> Fraction:
        """``e(S, T)`` for disjoint ``s`` and ``t``."""
        a, b = self._mask(s), self._mask(t)
        if a & b:
            raise ValueError("edges_between needs disjoint sets")
        return (self.cut(a) + self.cut(b) - self.cut(a | b)) / 2

    @property
    def all_mask(self) -> int:
        return (1 << self._n) - 1

    def complement(self, s: Iterable[int] | int) -> frozenset[int]:
        return from_mask(self.all_mask & ~self._mask(s))

    # -- structure -------------------------------------------------------

    @cached_property
    def _component_masks(self) -> tuple[int, ...]:
        nbr = self.neighbor_masks
        seen = 0
        comps = []
        for v in range(self._n):
            if seen >> v & 1:
                continue
            comp = frontier = 1 << v
            while frontier:
                low = frontier & -frontier
                frontier ^= low
                new = nbr[low.bit_length() - 1] & ~comp
                comp |= new
                frontier |= new
            seen |= comp
            comps.append(comp)
        return tuple(comps)

    def component_masks(self) -> tuple[int, ...]:
        return self._component_masks

    def components(self) -> list[frozenset[int]]:
        """Connected components ordered by smallest vertex; isolated vertices are singletons."""
        return [from_mask(c) for c in self._component_masks]

    def is_connected(self) -> bool:
        return len(self._component_masks) <= 1

    def is_connected_set(self, s: Iterable[int] | int) -> bool:
        mask = self._mask(s)
        if not mask:
            return False
        nbr = self.neighbor_masks
        low = mask & -mask
        reach = frontier = low
        while frontier:
            b = frontier & -frontier
            frontier ^= b
            new = nbr[b.bit_length() - 1] & mask & ~reach
            reach |= new
            frontier |= new
        return reach == mask

    def isolated_vertices(self) -> list[int]:
        return [v for v, d in enumerate(self.degrees) if d == 0]

    def has_isolated_vertices(self) -> bool:
        return any(d == 0 for d in self.degrees)

    def induced(self, s: Iterable[int] | int) -> tuple[Graph, tuple[int, ...]]:
        """Subgraph induced by ``s`` with compacted ids, plus the map back to original ids."""
        mask = self._mask(s)
        if not mask:
            raise EmptySet("cannot induce on the empty set")
        keep = tuple(mask_bits(mask))
        index = {v: i for i, v in enumerate(keep)}
        edges = [(index[u], index[v], w) for u, v, w in self._edges if u in index and v in index]
        return Graph(len(keep), edges), keep

    def subgraph(self, s: Iterable[int] | int) -> Graph:
        return self.induced(s)[0]

    def without_isolated(self) -> tuple[Graph, tuple[int, ...]]:
        keep = [v for v, d in enumerate(self.degrees) if d > 0]
        if len(keep) == self._n:
            return self, tuple(range(self._n))
        return self.induced(keep)

    def disjoint_union(self, other: Graph) -> Graph:
        shift = self._n
        return Graph(self._n + other._n, list(self._edges) + [(u + shift, v + shift, w) for u, v, w in other._edges])

    def with_disjoint_edges(self, count: int) -> Graph:
        """This graph plus ``count`` disjoint unit edges on fresh vertices."""
        n = self._n
        extra = [(n + 2 * i, n + 2 * i + 1, Fraction(1)) for i in range(count)]
        return Graph(n + 2 * count, list(self._edges) + extra)

    # -- connected-set enumeration --------------------------------------

    def connected_subsets(self, root: int, allowed: int) -> Iterator[int]:
        """All connected vertex sets containing ``root`` inside the mask ``allowed``.

        Each set is produced exactly once (include/exclude branching on the
        frontier). Output order is not sorted.
        """
        nbr = self.neighbor_masks
        if not allowed >> root & 1:
            return
        start = 1 << root
        stack = [(start, nbr[root] & allowed & ~start, start)]
        while stack:
            current, frontier, banned = stack.pop()
            yield current
            while frontier:
                low = frontier & -frontier
                frontier ^= low
                v = low.bit_length() - 1
                child = current | low
                child_banned = banned | low
                child_frontier = (frontier | (nbr[v] & allowed)) & ~child_banned
                stack.append((child, child_frontier, child_banned))
                banned |= low

    def connected_sets(self, allowed: int | None = None) -> list[int]:
        """Every connected vertex set inside ``allowed`` (default: all vertices)."""
        if allowed is None:
            allowed = self.all_mask
        out = []
        rest = allowed
        while rest:
            low = rest & -rest
            v = low.bit_length() - 1
            out.extend(self.connected_subsets(v, rest))
            rest ^= low
        return out


# -- partitions ----------------------------------------------------------


@dataclass(frozen=True)
class Partition:
    """A set of disjoint non-empty parts, kept sorted by smallest member."""

    parts: tuple[frozenset[int], ...]

    def __post_init__(self) -> None:
        parts = tuple(sorted((frozenset(p) for p in self.parts), key=min))
        seen: set[int] = set()
        for p in parts:
            if not p:
                raise PartitionMismatch("partition has an empty part")
            if seen & p:
                raise PartitionMismatch("partition parts overlap")
            seen |= p
        object.__setattr__(self, "parts", parts)

    @classmethod
    def from_parts(cls, parts: Iterable[Iterable[int]]) -> Partition:
        return cls(tuple(frozenset(p) for p in parts))

    @classmethod
    def from_masks(cls, masks: Iterable[int]) -> Partition:
        return cls(tuple(from_mask(m) for m in masks))

    @classmethod
    def from_labels(cls, labels: Sequence[int]) -> Partition:
        groups: dict[int, list[int]] = {}
        for v, lab in enumerate(labels):
            groups.setdefault(lab, []).append(v)
        return cls(tuple(frozenset(g) for g in groups.values()))

    @classmethod
    def trivial(cls, n: int) -> Partition:
        return cls((frozenset(range(n)),)) if n else cls(())

    @classmethod
    def singletons(cls, n: int) -> Partition:
        return cls(tuple(frozenset([v]) for v in range(n)))

    def __len__(self) -> int:
        return len(self.parts)

    def __iter__(self) -> Iterator[frozenset[int]]:
        return iter(self.parts)

    @property
    def support(self) -> frozenset[int]:
        return frozenset().union(*self.parts)

    def masks(self) -> list[int]:
        return [to_mask(p) for p in self.parts]

    def labels(self, n: int | None = None) -> list[int]:
        if n is None:
            n = max(self.support, default=-1) + 1
        out = [-1] * n
        for i, p in enumerate(self.parts):
            for v in p:
                out[v] = i
        return out

    def sort_key(self) -> tuple[tuple[int, ...], ...]:
        return tuple(tuple(sorted(p)) for p in self.parts)

    def restrict(self, s: Iterable[int]) -> Partition:
        s = frozenset(s)
        return Partition(tuple(p & s for p in self.parts if p & s))

    def part_of(self, v: int) -> frozenset[int]:
        for p in self.parts:
            if v in p:
                return p
        raise KeyError(v)

    def is_partition_of(self, n: int) -> bool:
        return self.support == frozenset(range(n))

    def check_covers(self, n: int) -> None:
        if not self.is_partition_of(n):
            raise PartitionMismatch(f"parts do not cover exactly the vertices 0..{n - 1}")

    def refines(self, other: Partition) -> bool:
        return all(any(p <= q for q in other.parts) for p in self.parts)

    def __str__(self) -> str:
        return " | ".join(",".join(map(str, sorted(p))) for p in self.parts)


def boundary(g: Graph, p: Partition) -> Fraction:
    """``∂(P)``: total weight of edges whose ends lie in different parts."""
    return g.num_edges - sum((g.internal_edges(part) for part in p), Fraction(0))


def max_in(g: Graph, p: Partition) -> Fraction:
    return max(g.internal_edges(part) for part in p)


def max_out(g: Graph, p: Partition) -> Fraction:
    return max(g.cut(part) for part in p)


# -- edge-list text format ----------------------------------------------


def format_ratio(x: Fraction) -> str:
    return str(Fraction(x))


def parse_ratio(token: str) -> Fraction:
    if "/" in token:
        num, den = token.split("/", 1)
        return Fraction(int(num), int(den))
    return Fraction(int(token))


def parse_edgelist(text: str) -> Graph:
    """Parse the line-oriented ``p``/``e`` edge-list format.

    ``# comment`` lines are ignored, ``p <n>`` must appear exactly once and
    before any edge, ``e <u> <v> [<w>]`` adds an edge (weight defaults to 1).
    """
    n: int | None = None
    edges: list[Edge] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        tokens = line.split()
        tag = tokens[0]
        if tag == "p":
            if n is not None:
                raise EdgeListSyntaxError(lineno, "duplicate 'p' line")
            if len(tokens) != 2:
                raise EdgeListSyntaxError(lineno, "expected 'p <n>'")
            try:
                n = int(tokens[1])
            except ValueError:
                raise EdgeListSyntaxError(lineno, f"bad vertex count {tokens[1]!r}") from None
            if n < 0:
                raise EdgeListSyntaxError(lineno, "negative vertex count")
        elif tag == "e":
            if n is None:
                raise EdgeListSyntaxError(lineno, "edge before 'p' line")
            if len(tokens) not in (3, 4):
                raise EdgeListSyntaxError(lineno, "expected 'e <u> <v> [<w>]'")
            try:
                u, v = int(tokens[1]), int(tokens[2])
                w = parse_ratio(tokens[3]) if len(tokens) == 4 else Fraction(1)
            except (ValueError, ZeroDivisionError):
                raise EdgeListSyntaxError(lineno, f"malformed edge {line!r}") from None
            if not (0 <= u < n and 0 <= v < n):
                raise VertexOutOfRange(f"line {lineno}: edge ({u}, {v}) outside 0..{n - 1}")
            if w <= 0:
                raise NonPositiveWeight(f"line {lineno}: weight {w} is not positive")
            edges.append((u, v, w))
        else:
            raise EdgeListSyntaxError(lineno, f"unknown record type {tag!r}")
    if n is None:
        raise EdgeListSyntaxError(0, "missing 'p <n>' line")
    return Graph(n, edges)


def serialize_edgelist(g: Graph) -> str:
    lines = [f"p {g.n}"]
    for u, v, w in sorted(g.edges):
        lines.append(f"e {u} {v} {format_ratio(w)}")
    return "\n".join(lines) + "\n"


def read_graph(path: str | Path) -> Graph:
    return parse_edgelist(Path(path).read_text(encoding="utf-8"))


def write_graph(g: Graph, path: str | Path) -> None:
    Path(path).write_text(serialize_edgelist(g), encoding="utf-8")
