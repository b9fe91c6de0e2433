"""Seeded test-graph families.

``random_bridgeless`` grows a graph by ear decomposition: a cycle on some of
the vertices, then ears (paths through fresh vertices between existing ones,
or bare chords) until exactly ``n`` vertices and ``m`` edges are placed.
Every ear adds one more edge than vertices, so there are ``m - n`` ears after
the cycle.  All randomness comes from ``random.Random(seed)`` (MT19937).
"""

from __future__ import annotations

import dataclasses
import random
from enum import Enum
from typing import Iterator

from .graph import UndirectedGraph


class Family(str, Enum):
    RANDOM_BRIDGELESS = "random_bridgeless"
    CYCLE = "cycle"
    COMPLETE = "complete"
    WHEEL = "wheel"
    THETA = "theta"
    TWO_CLIQUES_BRIDGED = "two_cliques_bridged"


class GenSpecError(ValueError):
    pass


@dataclasses.dataclass(frozen=True)
class GenSpec:
    family: Family
    n: int
    m: int | None = None  # only random_bridgeless uses it
    seed: int = 0

    def __post_init__(self):
        object.__setattr__(self, "family", Family(self.family))
        if self.family is Family.RANDOM_BRIDGELESS:
            if self.m is None:
                raise GenSpecError("random_bridgeless needs an edge count m")
            if self.n < 3 or not self.n <= self.m <= self.n * (self.n - 1) // 2:
                raise GenSpecError(
                    f"random_bridgeless needs n >= 3 and n <= m <= n(n-1)/2, got n={self.n}, m={self.m}"
                )


def generate(spec: GenSpec) -> UndirectedGraph:
    builders = {
        Family.RANDOM_BRIDGELESS: lambda: random_bridgeless(spec.n, spec.m, spec.seed),
        Family.CYCLE: lambda: cycle(spec.n),
        Family.COMPLETE: lambda: complete(spec.n),
        Family.WHEEL: lambda: wheel(spec.n),
        Family.THETA: lambda: theta(spec.n),
        Family.TWO_CLIQUES_BRIDGED: lambda: two_cliques_bridged(spec.n),
    }
    return builders[spec.family]()


def cycle(n: int) -> UndirectedGraph:
    if n < 3:
        raise GenSpecError(f"a cycle needs at least 3 vertices, got {n}")
    return UndirectedGraph(n, tuple((i, (i + 1) % n) for i in range(n)))


def complete(n: int) -> UndirectedGraph:
    if n < 0:
        raise GenSpecError(f"negative vertex count {n}")
    return UndirectedGraph(n, tuple((a, b) for a in range(n) for b in range(a + 1, n)))


def wheel(n: int) -> UndirectedGraph:
    """Hub ``n-1`` joined to every vertex of the cycle ``0..n-2``; W5 has 8 edges."""
    if n < 4:
        raise GenSpecError(f"a wheel needs at least 4 vertices, got {n}")
    rim = n - 1
    edges = [(i, (i + 1) % rim) for i in range(rim)] + [(i, rim) for i in range(rim)]
    return UndirectedGraph(n, tuple(edges))


def theta(n: int) -> UndirectedGraph:
    """Vertices 0 and 1 joined by three internally disjoint paths of near-equal length."""
    if n < 4:
        raise GenSpecError(f"a theta graph needs at least 4 vertices, got {n}")
    inner = n - 2
    sizes = [inner // 3 + (1 if k < inner % 3 else 0) for k in range(3)]
    edges = []
    fresh = 2
    for size in sizes:
        prev = 0
        for _ in range(size):
            edges.append((prev, fresh))
            prev = fresh
            fresh += 1
        edges.append((prev, 1))
    return UndirectedGraph(n, tuple(edges))


def two_cliques_bridged(n: int) -> UndirectedGraph:
    """Cliques on ``0..k-1`` and ``k..n-1`` (``k = n // 2``) plus the single bridge ``(0, k)``."""
    if n < 2:
        raise GenSpecError(f"two cliques need at least 2 vertices, got {n}")
    k = n // 2
    edges = [(a, b) for a in range(k) for b in range(a + 1, k)]
    edges += [(a, b) for a in range(k, n) for b in range(a + 1, n)]
    edges.append((0, k))
    return UndirectedGraph(n, tuple(edges))


def random_bridgeless(n: int, m: int, seed: int) -> UndirectedGraph:
    GenSpec(Family.RANDOM_BRIDGELESS, n, m, seed)
    rng = random.Random(seed)
    ears = m - n
    k = n if ears == 0 else rng.randint(3, n)
    # split the n - k fresh vertices over the ears
    sizes = [0] * ears
    for _ in range(n - k):
        sizes[rng.randrange(ears)] += 1

    edges: list[tuple[int, int]] = [(i, (i + 1) % k) for i in range(k)]
    present = {frozenset(e) for e in edges}
    placed = k

    def add(a, b):
        edges.append((a, b))
        present.add(frozenset((a, b)))

    deferred = 0
    for size in sizes:
        if size == 0:
            # bare chord; if every pair is taken right now, place it once all vertices exist
            pair = _free_pair(rng, placed, present)
            if pair is None:
                deferred += 1
            else:
                add(*pair)
            continue
        a, b = rng.sample(range(placed), 2)
        if size >= 2 and rng.random() < 0.25:
            b = a  # closed ear back to its start vertex
        prev = a
        for _ in range(size):
            add(prev, placed)
            prev = placed
            placed += 1
        add(prev, b)
    for _ in range(deferred):
        add(*_free_pair(rng, n, present))

    labels = list(range(n))
    rng.shuffle(labels)
    relabelled = [(labels[a], labels[b]) for a, b in edges]
    rng.shuffle(relabelled)
    return UndirectedGraph(n, tuple((min(a, b), max(a, b)) for a, b in relabelled))


def _free_pair(rng: random.Random, placed: int, present) -> tuple[int, int] | None:
    for _ in range(32):
        a, b = rng.sample(range(placed), 2)
        if frozenset((a, b)) not in present:
            return a, b
    free = [(a, b) for a in range(placed) for b in range(a + 1, placed) if frozenset((a, b)) not in present]
    return rng.choice(free) if free else None


def small_graphs(max_n: int, *, min_n: int = 1) -> Iterator[UndirectedGraph]:
    """Every simple graph on ``min_n..max_n`` vertices up to isomorphism (max_n <= 7).

    Read from the Atlas of Graphs shipped with networkx.
    """
    from networkx.generators.atlas import graph_atlas_g

    if max_n > 7:
        raise GenSpecError("the graph atlas only covers graphs on up to 7 vertices")
    for h in graph_atlas_g():
        if min_n <= h.number_of_nodes() <= max_n:
            yield UndirectedGraph(h.number_of_nodes(), tuple(sorted((min(a, b), max(a, b)) for a, b in h.edges())))
