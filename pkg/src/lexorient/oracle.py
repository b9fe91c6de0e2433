"""Exhaustive ground truth on small graphs and executable structural checks.

The enumeration here deliberately avoids the connectivity module: strong
connectivity of each candidate is decided with its own bitmask closure, so
agreement with the reversal algorithms is a genuinely independent check.
"""

from __future__ import annotations

import dataclasses
from typing import Iterator

from .connectivity import components, is_strongly_connected, two_reach_set, two_reaches
from .graph import (
    ContractError,
    DirectedPath,
    InfeasibleGraph,
    Orientation,
    UndirectedGraph,
    reverse_path,
)

DEFAULT_CAP = 24


class EnumerationCapExceeded(ValueError):
    def __init__(self, m: int, cap: int):
        super().__init__(f"refusing to enumerate 2^{m} orientations: edge count {m} exceeds cap {cap}")
        self.m = m
        self.cap = cap


@dataclasses.dataclass(frozen=True)
class OracleResult:
    best_sequence: tuple[int, ...] | None
    best_orientation: Orientation | None
    candidates_examined: int
    feasible_count: int

    def format(self) -> str:
        best = ",".join(map(str, self.best_sequence)) if self.best_sequence is not None else ""
        return f"best={best} examined={self.candidates_examined} feasible={self.feasible_count}"


def _check_cap(g: UndirectedGraph, cap: int) -> None:
    if g.m > cap:
        raise EnumerationCapExceeded(g.m, cap)


def enumerate_orientations(g: UndirectedGraph, cap: int = DEFAULT_CAP) -> Iterator[Orientation]:
    """All ``2**m`` orientations; bit ``i`` of the counter is the direction of edge ``i``."""
    _check_cap(g, cap)
    for bits in range(1 << g.m):
        yield Orientation.from_bits(g, bits)


def _closure(start: int, adj: list[int]) -> int:
    seen = 1 << start
    frontier = seen
    while frontier:
        nxt = 0
        while frontier:
            low = frontier & -frontier
            nxt |= adj[low.bit_length() - 1]
            frontier ^= low
        frontier = nxt & ~seen
        seen |= frontier
    return seen


def _feasible_indegrees(g: UndirectedGraph, require_strong: bool, cap: int):
    """Yield ``(bits, indegrees)`` for every orientation passing the filter."""
    _check_cap(g, cap)
    n = g.n
    full = (1 << n) - 1
    edges = g.edges
    for bits in range(1 << g.m):
        deg = [0] * n
        out = [0] * n
        inc = [0] * n
        for i, (a, b) in enumerate(edges):
            if (bits >> i) & 1:
                a, b = b, a
            deg[b] += 1
            out[a] |= 1 << b
            inc[b] |= 1 << a
        if require_strong and n > 1:
            if 0 in deg or 0 in out:
                continue
            if _closure(0, out) != full or _closure(0, inc) != full:
                continue
        yield bits, deg


def oracle_scan(g: UndirectedGraph, require_strong: bool, cap: int = DEFAULT_CAP) -> OracleResult:
    """Lex-minimal indegree sequence over all (strongly connected, if asked) orientations.

    ``best_sequence`` is None when nothing passes the filter.  The first
    orientation met in enumeration order is kept as the witness.
    """
    best = best_bits = None
    feasible = 0
    for bits, deg in _feasible_indegrees(g, require_strong, cap):
        feasible += 1
        seq = sorted(deg, reverse=True)
        if best is None or seq < best:
            best, best_bits = seq, bits
    witness = Orientation.from_bits(g, best_bits) if best_bits is not None else None
    return OracleResult(tuple(best) if best is not None else None, witness, 1 << g.m, feasible)


def oracle_min_lex(g: UndirectedGraph, require_strong: bool, cap: int = DEFAULT_CAP) -> OracleResult:
    result = oracle_scan(g, require_strong, cap)
    if result.best_sequence is None:
        raise InfeasibleGraph("no strongly connected orientation exists")
    return result


def oracle_min_max_indegree(g: UndirectedGraph, require_strong: bool, cap: int = DEFAULT_CAP) -> int:
    best = None
    for _, deg in _feasible_indegrees(g, require_strong, cap):
        top = max(deg, default=0)
        if best is None or top < best:
            best = top
    if best is None:
        raise InfeasibleGraph("no strongly connected orientation exists")
    return best


def _require_strong(o: Orientation) -> None:
    if not is_strongly_connected(o):
        raise ContractError("orientation is not strongly connected")


def check_lemma1(o: Orientation, p: DirectedPath) -> bool:
    """Flipping ``p`` keeps ``o`` strongly connected iff its source two-reaches its target."""
    _require_strong(o)
    stays_strong = is_strongly_connected(reverse_path(o, p))
    return stays_strong == (two_reaches(o, p.source, p.target) is not None)


def outside_components(o: Orientation, inside: frozenset[int]) -> list[list[int]]:
    """Weak components of the subdigraph induced on the vertices not in ``inside``."""
    return components(o.graph, [x for x in range(o.graph.n) if x not in inside])


def check_lemma3(o: Orientation, v: int) -> bool:
    """Every weak component outside the two-reach set of ``v`` sends exactly one arc into it."""
    _require_strong(o)
    inside = two_reach_set(o, v)
    for comp in outside_components(o, inside):
        members = set(comp)
        into = sum(1 for t, h in o.arcs if t in members and h in inside)
        if into != 1:
            return False
    return True


def check_boundary_identity(o: Orientation, v: int) -> bool:
    """Indegrees summed over the two-reach set of ``v`` equal the edges inside it
    plus the number of weak components outside it."""
    _require_strong(o)
    inside = two_reach_set(o, v)
    lhs = sum(o.indegrees[u] for u in inside)
    internal = sum(1 for a, b in o.graph.edges if a in inside and b in inside)
    return lhs == internal + len(outside_components(o, inside))

