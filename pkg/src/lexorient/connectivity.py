"""Strong connectivity, bridges and two-reachability (two arc-disjoint directed paths).

``two_reaches`` answers single queries with two rounds of augmenting-path
search over unit arc capacities and returns the paths as a witness.
``two_reach_set`` answers "who two-reaches v" for all sources at once using
edge dominators of the reversed digraph; ``two_reach_set_pairwise`` is the
slow, obviously-correct version kept for cross-checking.
"""

from __future__ import annotations

import dataclasses
from collections import deque
from typing import Iterable, Sequence

from .graph import DirectedPath, Orientation, UndirectedGraph


@dataclasses.dataclass(frozen=True)
class TwoReachWitness:
    path_a: DirectedPath
    path_b: DirectedPath

    @property
    def source(self) -> int:
        return self.path_a.source

    @property
    def target(self) -> int:
        return self.path_a.target

    def is_valid_in(self, o: Orientation) -> bool:
        a, b = self.path_a, self.path_b
        if (a.source, a.target) != (b.source, b.target):
            return False
        if not (a.is_valid_in(o) and b.is_valid_in(o)):
            return False
        if a.source == a.target:
            return len(a) == 0 and len(b) == 0
        return not set(a.arcs) & set(b.arcs)


def reachable(o: Orientation, start: int, *, reverse: bool = False) -> list[bool]:
    """Vertices reachable from ``start`` along arcs (against them if ``reverse``)."""
    adj = o.in_arcs if reverse else o.out_arcs
    seen = [False] * o.graph.n
    seen[start] = True
    stack = [start]
    while stack:
        x = stack.pop()
        for y, _ in adj[x]:
            if not seen[y]:
                seen[y] = True
                stack.append(y)
    return seen


def is_strongly_connected(o: Orientation) -> bool:
    if o.graph.n <= 1:
        return True
    return all(reachable(o, 0)) and all(reachable(o, 0, reverse=True))


def components(g: UndirectedGraph, vertices: Iterable[int] | None = None) -> list[list[int]]:
    """Connected components of the subgraph induced on ``vertices`` (default: all).

    Components are listed by smallest member, each sorted ascending.
    """
    allowed = [True] * g.n if vertices is None else [False] * g.n
    if vertices is not None:
        for v in vertices:
            allowed[v] = True
    label = [-1] * g.n
    result = []
    for s in range(g.n):
        if not allowed[s] or label[s] >= 0:
            continue
        label[s] = len(result)
        comp = [s]
        stack = [s]
        while stack:
            x = stack.pop()
            for y, _ in g.adjacency[x]:
                if allowed[y] and label[y] < 0:
                    label[y] = label[s]
                    comp.append(y)
                    stack.append(y)
        result.append(sorted(comp))
    return result


def is_connected(g: UndirectedGraph) -> bool:
    return len(components(g)) <= 1


def find_bridges(g: UndirectedGraph) -> set[int]:
    """Indices of edges whose removal disconnects their component (iterative lowpoint DFS)."""
    disc = [-1] * g.n
    low = [0] * g.n
    bridges = set()
    clock = 0
    for root in range(g.n):
        if disc[root] >= 0:
            continue
        disc[root] = low[root] = clock
        clock += 1
        # frames: (vertex, edge index used to enter it, iterator position)
        stack = [(root, -1, 0)]
        while stack:
            x, via, pos = stack[-1]
            adj = g.adjacency[x]
            if pos < len(adj):
                stack[-1] = (x, via, pos + 1)
                y, i = adj[pos]
                if i == via:
                    continue
                if disc[y] < 0:
                    disc[y] = low[y] = clock
                    clock += 1
                    stack.append((y, i, 0))
                else:
                    low[x] = min(low[x], disc[y])
            else:
                stack.pop()
                if stack:
                    parent = stack[-1][0]
                    low[parent] = min(low[parent], low[x])
                    if low[x] > disc[parent]:
                        bridges.add(via)
    return bridges


def _augmenting_flow(
    n_nodes: int, arcs: Sequence[tuple[int, int]], source: int, sink: int, target: int
) -> list[int] | None:
    """Push ``target`` units through unit-capacity ``arcs``; return per-arc flow or None."""
    out: list[list[int]] = [[] for _ in range(n_nodes)]
    inc: list[list[int]] = [[] for _ in range(n_nodes)]
    for i, (t, h) in enumerate(arcs):
        out[t].append(i)
        inc[h].append(i)
    flow = [0] * len(arcs)
    for _ in range(target):
        # parent[x] = (arc index, +1 forward / -1 backward)
        parent: dict[int, tuple[int, int]] = {source: (-1, 0)}
        queue = deque([source])
        while queue and sink not in parent:
            x = queue.popleft()
            for i in out[x]:
                y = arcs[i][1]
                if not flow[i] and y not in parent:
                    parent[y] = (i, 1)
                    queue.append(y)
            for i in inc[x]:
                y = arcs[i][0]
                if flow[i] and y not in parent:
                    parent[y] = (i, -1)
                    queue.append(y)
        if sink not in parent:
            return None
        x = sink
        while x != source:
            i, sign = parent[x]
            if sign > 0:
                flow[i] = 1
                x = arcs[i][0]
            else:
                flow[i] = 0
                x = arcs[i][1]
    return flow


def _decompose(arcs: Sequence[tuple[int, int]], flow: list[int], source: int, sink: int, k: int):
    """Split a unit flow into ``k`` arc-disjoint vertex-simple paths (as arc index lists)."""
    out: dict[int, list[int]] = {}
    for i in sorted(i for i, f in enumerate(flow) if f):
        out.setdefault(arcs[i][0], []).append(i)
    for lst in out.values():
        lst.reverse()  # pop() yields the smallest index first
    paths = []
    for _ in range(k):
        verts = [source]
        used: list[int] = []
        pos = {source: 0}
        while verts[-1] != sink:
            i = out[verts[-1]].pop()
            y = arcs[i][1]
            if y in pos:
                # cut the cycle just closed; its arcs stay consumed
                cut = pos[y]
                for z in verts[cut + 1 :]:
                    del pos[z]
                del verts[cut + 1 :]
                del used[cut:]
            else:
                pos[y] = len(verts)
                verts.append(y)
                used.append(i)
        paths.append((verts, used))
    return paths


def two_reaches(o: Orientation, u: int, v: int) -> TwoReachWitness | None:
    """Two arc-disjoint directed ``u -> v`` paths, or None if they do not exist."""
    n = o.graph.n
    if not (0 <= u < n and 0 <= v < n):
        raise ValueError(f"vertices ({u}, {v}) not in [0, {n})")
    if u == v:
        return TwoReachWitness(DirectedPath.empty(u), DirectedPath.empty(u))
    arcs = o.arcs
    flow = _augmenting_flow(n, arcs, u, v, 2)
    if flow is None:
        return None
    (va, ea), (vb, eb) = _decompose(arcs, flow, u, v, 2)
    return TwoReachWitness(DirectedPath(tuple(va), tuple(ea)), DirectedPath(tuple(vb), tuple(eb)))


def has_disjoint_paths_to(o: Orientation, u: int, s: int, t: int) -> bool:
    """Whether some ``u -> s`` path and some ``u -> t`` path share no arc."""
    if s == t:
        return two_reaches(o, u, s) is not None
    n = o.graph.n
    sink = n
    arcs = list(o.arcs) + [(s, sink), (t, sink)]
    return _augmenting_flow(n + 1, arcs, u, sink, 2) is not None


def two_reach_set_pairwise(o: Orientation, v: int) -> frozenset[int]:
    return frozenset(u for u in range(o.graph.n) if two_reaches(o, u, v) is not None)


def two_reach_set(o: Orientation, v: int) -> frozenset[int]:
    """All vertices that two-reach ``v`` (always including ``v``).

    Reverse every arc and subdivide it with an extra node.  A vertex ``u``
    reached from ``v`` there fails to two-reach ``v`` exactly when a single
    arc node dominates it, so one dominator tree answers every source.
    """
    n = o.graph.n
    if not 0 <= v < n:
        raise ValueError(f"vertex {v} not in [0, {n})")
    arcs = o.arcs
    # Subdivided reversed digraph: arc i = t->h becomes h -> (n+i) -> t.
    def succ(x):
        if x < n:
            return [n + i for _, i in o.in_arcs[x]]
        return [arcs[x - n][0]]

    def pred(x):
        if x < n:
            return [n + i for _, i in o.out_arcs[x]]
        return [arcs[x - n][1]]

    order: list[int] = []  # postorder
    seen = {v}
    stack = [(v, iter(succ(v)))]
    while stack:
        x, it = stack[-1]
        for y in it:
            if y not in seen:
                seen.add(y)
                stack.append((y, iter(succ(y))))
                break
        else:
            stack.pop()
            order.append(x)
    post = {x: k for k, x in enumerate(order)}
    rpo = order[::-1]

    idom = {v: v}
    changed = True
    while changed:
        changed = False
        for x in rpo[1:]:
            new = None
            for p in pred(x):
                if p not in idom:
                    continue
                if new is None:
                    new = p
                    continue
                a, b = p, new
                while a != b:
                    while post[a] < post[b]:
                        a = idom[a]
                    while post[b] < post[a]:
                        b = idom[b]
                new = a
            if idom.get(x) != new:
                idom[x] = new
                changed = True

    cut = {v: False}
    for x in rpo[1:]:
        d = idom[x]
        cut[x] = d >= n or cut[d]
    return frozenset(x for x in rpo if x < n and not cut[x])


def check_lemma2_composition(o: Orientation, u: int, s: int, t: int, v: int) -> bool | None:
    """If ``s`` and ``t`` two-reach ``v`` and ``u`` has arc-disjoint routes to ``s`` and ``t``,
    report whether ``u`` two-reaches ``v``.  Returns None when the premises fail.
    """
    if two_reaches(o, s, v) is None or two_reaches(o, t, v) is None:
        return None
    if not has_disjoint_paths_to(o, u, s, t):
        return None
    return two_reaches(o, u, v) is not None
