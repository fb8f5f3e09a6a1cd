"""Seedable SplitMix64 generator and random test-instance builders.

The generator is fully specified here so seeded runs reproduce on any
platform: the 64-bit state advances by ``0x9E3779B97F4A7C15`` and each output
is the state passed through the finaliser

    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9
    z = (z ^ (z >> 27)) * 0x94D049BB133111EB
    z =  z ^ (z >> 31)

with all arithmetic mod 2**64.
"""

from __future__ import annotations

from fractions import Fraction

from .graph import Graph, Partition

MASK64 = (1 << 64) - 1
GOLDEN = 0x9E3779B97F4A7C15


class SplitMix64:
    def __init__(self, seed: int = 0) -> None:
        self.state = seed & MASK64

    def next_u64(self) -> int:
        self.state = (self.state + GOLDEN) & MASK64
        z = self.state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & MASK64
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & MASK64
        return z ^ (z >> 31)

    def below(self, bound: int) -> int:
        """Uniform integer in ``[0, bound)`` by rejection (no modulo bias)."""
        if bound <= 0:
            raise ValueError("bound must be positive")
        limit = (1 << 64) - ((1 << 64) % bound)
        while True:
            x = self.next_u64()
            if x < limit:
                return x % bound

    def randint(self, lo: int, hi: int) -> int:
        """Uniform integer in ``[lo, hi]``."""
        return lo + self.below(hi - lo + 1)

    def random(self) -> float:
        return (self.next_u64() >> 11) * (1.0 / (1 << 53))

    def bernoulli(self, p: float) -> bool:
        return self.random() < p

    def choice(self, seq):
        return seq[self.below(len(seq))]

    def shuffle(self, items: list) -> None:
        for i in range(len(items) - 1, 0, -1):
            j = self.below(i + 1)
            items[i], items[j] = items[j], items[i]


def random_graph(rng: SplitMix64, n: int, p: float, weights: tuple[Fraction, ...] = ()) -> Graph:
    """G(n, p); when ``weights`` is given each edge weight is drawn from it."""
    edges = []
    for u in range(n):
        for v in range(u + 1, n):
            if rng.bernoulli(p):
                edges.append((u, v, rng.choice(weights) if weights else Fraction(1)))
    return Graph(n, edges)


def random_connected_graph(rng: SplitMix64, n: int, p: float, weights: tuple[Fraction, ...] = ()) -> Graph:
    """Random spanning tree plus independent extra edges with probability ``p``."""
    order = list(range(n))
    rng.shuffle(order)
    pairs = set()
    for i in range(1, n):
        u, v = order[i], order[rng.below(i)]
        pairs.add((min(u, v), max(u, v)))
    for u in range(n):
        for v in range(u + 1, n):
            if (u, v) not in pairs and rng.bernoulli(p):
                pairs.add((u, v))
    edges = [(u, v, rng.choice(weights) if weights else Fraction(1)) for u, v in sorted(pairs)]
    return Graph(n, edges)


def random_partition(rng: SplitMix64, n: int, max_parts: int | None = None) -> Partition:
    k = max_parts or n
    labels = [rng.below(k) for _ in range(n)]
    return Partition.from_labels(labels)


def planted_component_instance(rng: SplitMix64) -> tuple[Graph, frozenset[int]]:
    """A small random connected component next to a random host of small components.

    Returns the graph and the vertex set of the planted component (vertices
    ``0..h-1``). Every other component is connected with at most 6 vertices,
    so exact per-component optimisation stays cheap.
    """
    h = rng.randint(2, 5)
    g = random_connected_graph(rng, h, 0.4)
    for _ in range(rng.randint(1, 10)):
        size = rng.randint(2, 6)
        g = g.disjoint_union(random_connected_graph(rng, size, rng.random()))
    return g, frozenset(range(h))
