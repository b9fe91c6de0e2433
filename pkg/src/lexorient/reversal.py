"""Greedy path reversal, unconstrained and strong-connectivity preserving.

Both algorithms repeatedly pick a directed path from a low-indegree vertex u
to a high-indegree vertex v with ``d(u) < d(v) - 1`` and flip it.  The
strongly connected variant additionally requires u to two-reach v, which is
exactly the condition for the flip to keep the digraph strongly connected.

Selection is deterministic: targets are tried by decreasing indegree (ties to
the smaller id), the source is the eligible vertex of least indegree (ties to
the smaller id), and the flipped path is the shortest one, lexicographically
smallest among shortest.

Random choices use Python's ``random.Random`` (MT19937) seeded with the
integer seed; orientation bit ``i`` is the ``i``-th ``getrandbits(1)`` draw.
"""

from __future__ import annotations

import dataclasses
import random
from collections import deque
from typing import Callable

from .connectivity import (
    components,
    find_bridges,
    is_strongly_connected,
    reachable,
    two_reach_set,
)
from .graph import (
    ContractError,
    DirectedPath,
    InfeasibleGraph,
    Orientation,
    UndirectedGraph,
    format_orientation,
    reverse_path,
)


@dataclasses.dataclass(frozen=True)
class ReversalStep:
    index: int
    source: int
    target: int
    path: tuple[int, ...]
    indegree_source: int
    indegree_target: int

    def format(self) -> str:
        return (
            f"step={self.index} u={self.source} v={self.target} "
            f"path={','.join(map(str, self.path))} "
            f"din_u={self.indegree_source} din_v={self.indegree_target}"
        )


@dataclasses.dataclass(frozen=True)
class ReversalTrace:
    initial: Orientation
    final: Orientation
    steps: tuple[ReversalStep, ...] = ()

    def replay(self) -> list[Orientation]:
        """Every orientation visited, from ``initial`` through ``final``."""
        states = [self.initial]
        for step in self.steps:
            p = DirectedPath.from_vertices(self.initial.graph, step.path)
            states.append(reverse_path(states[-1], p))
        return states

    def format(self) -> str:
        parts = [format_orientation(self.initial)]
        parts.extend(step.format() + "\n" for step in self.steps)
        parts.append(format_orientation(self.final))
        return "".join(parts)


def shortest_path(o: Orientation, u: int, v: int) -> DirectedPath | None:
    """BFS path ``u -> v``; among shortest paths, the lexicographically smallest vertex sequence."""
    parent = {u: (-1, -1)}
    queue = deque([u])
    while queue and v not in parent:
        x = queue.popleft()
        for y, i in o.out_arcs[x]:
            if y not in parent:
                parent[y] = (x, i)
                queue.append(y)
    if v not in parent:
        return None
    verts, arcs = [v], []
    x = v
    while x != u:
        x, i = parent[x]
        verts.append(x)
        arcs.append(i)
    return DirectedPath(tuple(reversed(verts)), tuple(reversed(arcs)))


def _select(o: Orientation, eligible_sources: Callable[[int], object]) -> DirectedPath | None:
    deg = o.indegrees
    if not deg:
        return None
    low = min(deg)
    for v in sorted(range(len(deg)), key=lambda x: (-deg[x], x)):
        if deg[v] < low + 2:
            break
        pool = eligible_sources(v)
        best = None
        for u in range(len(deg)):
            if deg[u] < deg[v] - 1 and u in pool and (best is None or deg[u] < deg[best]):
                best = u
        if best is not None:
            return shortest_path(o, best, v)
    return None


def find_reversible_path(o: Orientation) -> DirectedPath | None:
    def reaching(v):
        return {u for u, ok in enumerate(reachable(o, v, reverse=True)) if ok}

    return _select(o, reaching)


def find_strongly_reversible_path(o: Orientation) -> DirectedPath | None:
    if not is_strongly_connected(o):
        raise ContractError("orientation is not strongly connected")
    return _select(o, lambda v: two_reach_set(o, v))


def random_orientation(g: UndirectedGraph, rng: random.Random) -> Orientation:
    return Orientation(g, tuple(rng.getrandbits(1) for _ in range(g.m)))


def check_feasible(g: UndirectedGraph) -> None:
    comps = components(g)
    if len(comps) > 1:
        a, b = comps[0][0], comps[1][0]
        raise InfeasibleGraph(
            f"graph is disconnected: vertices {a} and {b} lie in different components",
            components=(a, b),
        )
    bridges = find_bridges(g)
    if bridges:
        i = min(bridges)
        a, b = g.edges[i]
        raise InfeasibleGraph(f"graph has a bridge: edge {i} ({a}, {b})", bridge=i)


def initial_strong_orientation(g: UndirectedGraph) -> Orientation:
    """DFS from vertex 0: tree edges point away from the root, the rest point back up."""
    check_feasible(g)
    direction = [0] * g.m
    disc = [-1] * g.n
    tree = [False] * g.m
    clock = 0
    for root in range(min(g.n, 1)):
        disc[root] = clock
        clock += 1
        stack = [(root, 0)]
        while stack:
            x, pos = stack[-1]
            adj = g.adjacency[x]
            if pos == len(adj):
                stack.pop()
                continue
            stack[-1] = (x, pos + 1)
            y, i = adj[pos]
            if disc[y] < 0:
                disc[y] = clock
                clock += 1
                tree[i] = True
                direction[i] = 0 if g.edges[i][0] == x else 1
                stack.append((y, 0))
    for i, (a, b) in enumerate(g.edges):
        if not tree[i]:
            # undirected DFS: every non-tree edge joins a descendant to an ancestor
            direction[i] = 0 if disc[a] > disc[b] else 1
    o = Orientation(g, tuple(direction))
    if not is_strongly_connected(o):
        raise AssertionError("DFS orientation of a bridgeless connected graph is not strong")
    return o


def random_strong_orientation(g: UndirectedGraph, seed: int) -> Orientation:
    """Resample seeded random orientations until one is strongly connected.

    Gives up after ``10 * 2**min(m, 20)`` draws and falls back to the DFS orientation,
    so this is only practical for small graphs.
    """
    check_feasible(g)
    rng = random.Random(seed)
    for _ in range(10 * 2 ** min(g.m, 20)):
        o = random_orientation(g, rng)
        if is_strongly_connected(o):
            return o
    return initial_strong_orientation(g)


def _run(o: Orientation, find: Callable[[Orientation], DirectedPath | None]) -> ReversalTrace:
    initial = o
    steps = []
    while (p := find(o)) is not None:
        deg = o.indegrees
        steps.append(ReversalStep(len(steps), p.source, p.target, p.vertices, deg[p.source], deg[p.target]))
        o = reverse_path(o, p)
    return ReversalTrace(initial, o, tuple(steps))


def path_reversal(g: UndirectedGraph, seed: int = 0) -> tuple[Orientation, ReversalTrace]:
    """Orient every edge at random, then flip reversible paths until none remains."""
    trace = _run(random_orientation(g, random.Random(seed)), find_reversible_path)
    return trace.final, trace


def sc_path_reversal(
    g: UndirectedGraph, seed: int = 0, *, random_start: bool = False
) -> tuple[Orientation, ReversalTrace]:
    """Start strongly connected, then flip strongly reversible paths until none remains.

    The start is the DFS orientation unless ``random_start``, in which case it is a
    seeded random strong orientation.  Raises InfeasibleGraph for disconnected
    graphs and graphs with a bridge.
    """
    start = random_strong_orientation(g, seed) if random_start else initial_strong_orientation(g)
    trace = _run(start, find_strongly_reversible_path)
    return trace.final, trace
