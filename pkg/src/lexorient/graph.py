"""Undirected simple graphs, orientations of them, directed paths and indegree sequences.

Vertices are dense integers ``0..n-1``.  Edge indices follow input order and
every other structure (orientations, paths, traces) refers to edges by index.
"""

from __future__ import annotations

import dataclasses
from functools import cached_property
from typing import Iterable, Sequence


class GraphError(ValueError):
    """Base class for malformed graph input."""


class ParseError(GraphError):
    def __init__(self, message: str, line: int | None = None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class ValidationError(GraphError):
    """Self-loop or duplicate edge."""


class VertexRangeError(GraphError):
    pass


class InfeasibleGraph(ValueError):
    """The graph has no strongly connected orientation."""

    def __init__(self, message: str, bridge: int | None = None, components=None):
        super().__init__(message)
        self.bridge = bridge
        self.components = components


class ContractError(ValueError):
    """An operation was called with arguments violating its precondition."""


@dataclasses.dataclass(frozen=True)
class UndirectedGraph:
    n: int
    edges: tuple[tuple[int, int], ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "edges", tuple((int(a), int(b)) for a, b in self.edges))
        if self.n < 0:
            raise VertexRangeError(f"vertex count must be non-negative, got {self.n}")
        seen = set()
        for a, b in self.edges:
            for x in (a, b):
                if not 0 <= x < self.n:
                    raise VertexRangeError(f"endpoint {x} of edge ({a}, {b}) not in [0, {self.n})")
            if a == b:
                raise ValidationError(f"self-loop ({a}, {b})")
            key = (a, b) if a < b else (b, a)
            if key in seen:
                raise ValidationError(f"duplicate edge ({a}, {b})")
            seen.add(key)

    @property
    def m(self) -> int:
        return len(self.edges)

    @cached_property
    def edge_index(self) -> dict[tuple[int, int], int]:
        """Map from both ``(a, b)`` and ``(b, a)`` to the edge index."""
        index = {}
        for i, (a, b) in enumerate(self.edges):
            index[a, b] = i
            index[b, a] = i
        return index

    @cached_property
    def adjacency(self) -> tuple[tuple[tuple[int, int], ...], ...]:
        """Per vertex, sorted ``(neighbour, edge index)`` pairs."""
        adj: list[list[tuple[int, int]]] = [[] for _ in range(self.n)]
        for i, (a, b) in enumerate(self.edges):
            adj[a].append((b, i))
            adj[b].append((a, i))
        return tuple(tuple(sorted(row)) for row in adj)

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])


@dataclasses.dataclass(frozen=True)
class Orientation:
    """A direction for every edge of ``graph``.

    ``direction[i] == 0`` orients edge ``(a, b)`` as ``a -> b``; ``1`` as ``b -> a``.
    """

    graph: UndirectedGraph
    direction: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "direction", tuple(1 if d else 0 for d in self.direction))
        if len(self.direction) != self.graph.m:
            raise ContractError(
                f"orientation has {len(self.direction)} entries for a graph with {self.graph.m} edges"
            )

    @classmethod
    def from_arcs(cls, graph: UndirectedGraph, arcs: Iterable[tuple[int, int]]) -> Orientation:
        """Build from ``(tail, head)`` pairs covering every edge exactly once."""
        direction: list[int | None] = [None] * graph.m
        for tail, head in arcs:
            try:
                i = graph.edge_index[tail, head]
            except KeyError:
                raise ContractError(f"arc {tail}->{head} is not an edge of the graph") from None
            if direction[i] is not None:
                raise ContractError(f"edge {i} oriented twice")
            direction[i] = 0 if graph.edges[i] == (tail, head) else 1
        missing = [i for i, d in enumerate(direction) if d is None]
        if missing:
            raise ContractError(f"edges without a direction: {missing}")
        return cls(graph, tuple(direction))  # type: ignore[arg-type]

    @classmethod
    def from_bits(cls, graph: UndirectedGraph, bits: int) -> Orientation:
        return cls(graph, tuple((bits >> i) & 1 for i in range(graph.m)))

    def arc(self, i: int) -> tuple[int, int]:
        a, b = self.graph.edges[i]
        return (b, a) if self.direction[i] else (a, b)

    def tail(self, i: int) -> int:
        return self.arc(i)[0]

    def head(self, i: int) -> int:
        return self.arc(i)[1]

    @cached_property
    def arcs(self) -> tuple[tuple[int, int], ...]:
        return tuple(self.arc(i) for i in range(self.graph.m))

    @cached_property
    def out_arcs(self) -> tuple[tuple[tuple[int, int], ...], ...]:
        """Per vertex, ``(head, edge index)`` pairs sorted by head."""
        out: list[list[tuple[int, int]]] = [[] for _ in range(self.graph.n)]
        for i, (t, h) in enumerate(self.arcs):
            out[t].append((h, i))
        return tuple(tuple(sorted(row)) for row in out)

    @cached_property
    def in_arcs(self) -> tuple[tuple[tuple[int, int], ...], ...]:
        """Per vertex, ``(tail, edge index)`` pairs sorted by tail."""
        inc: list[list[tuple[int, int]]] = [[] for _ in range(self.graph.n)]
        for i, (t, h) in enumerate(self.arcs):
            inc[h].append((t, i))
        return tuple(tuple(sorted(row)) for row in inc)

    @cached_property
    def indegrees(self) -> tuple[int, ...]:
        deg = [0] * self.graph.n
        for _, h in self.arcs:
            deg[h] += 1
        return tuple(deg)

    def flipped(self, edge_indices: Iterable[int]) -> Orientation:
        direction = list(self.direction)
        for i in edge_indices:
            direction[i] ^= 1
        return Orientation(self.graph, tuple(direction))


@dataclasses.dataclass(frozen=True)
class DirectedPath:
    """A vertex-simple directed path, stored as its vertex sequence and edge indices.

    A path with one vertex and no arcs is the empty path from a vertex to itself.
    """

    vertices: tuple[int, ...]
    arcs: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "vertices", tuple(self.vertices))
        object.__setattr__(self, "arcs", tuple(self.arcs))
        if not self.vertices:
            raise ContractError("a path needs at least one vertex")
        if len(self.arcs) != len(self.vertices) - 1:
            raise ContractError("a path over k vertices has k-1 arcs")
        if len(set(self.vertices)) != len(self.vertices):
            raise ContractError(f"path {self.vertices} repeats a vertex")

    @property
    def source(self) -> int:
        return self.vertices[0]

    @property
    def target(self) -> int:
        return self.vertices[-1]

    def __len__(self) -> int:
        return len(self.arcs)

    @classmethod
    def empty(cls, v: int) -> DirectedPath:
        return cls((v,), ())

    @classmethod
    def from_vertices(cls, graph: UndirectedGraph, vertices: Sequence[int]) -> DirectedPath:
        try:
            arcs = tuple(graph.edge_index[a, b] for a, b in zip(vertices, vertices[1:]))
        except KeyError as exc:
            raise ContractError(f"{exc.args[0]} is not an edge of the graph") from None
        return cls(tuple(vertices), arcs)

    def is_valid_in(self, o: Orientation) -> bool:
        if not all(0 <= v < o.graph.n for v in self.vertices):
            return False
        for i, a, b in zip(self.arcs, self.vertices, self.vertices[1:]):
            if not 0 <= i < o.graph.m or o.arc(i) != (a, b):
                return False
        return True


def parse_graph(text: str) -> UndirectedGraph:
    """Parse the edge-list format: ``n=<int>`` then one ``<a> <b>`` per line.

    Blank lines and lines starting with ``#`` are ignored.
    """
    n = None
    edges = []
    seen: dict[tuple[int, int], int] = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        if n is None:
            key, sep, value = line.partition("=")
            if not sep or key.strip() != "n":
                raise ParseError(f"expected 'n=<int>' header, got {line!r}", lineno)
            try:
                n = int(value.strip())
            except ValueError:
                raise ParseError(f"vertex count {value.strip()!r} is not an integer", lineno) from None
            if n < 0:
                raise ParseError(f"vertex count must be non-negative, got {n}", lineno)
            continue
        fields = line.split()
        if len(fields) != 2:
            raise ParseError(f"expected '<a> <b>', got {line!r}", lineno)
        try:
            a, b = int(fields[0]), int(fields[1])
        except ValueError:
            raise ParseError(f"non-integer endpoint in {line!r}", lineno) from None
        for x in (a, b):
            if not 0 <= x < n:
                raise VertexRangeError(f"line {lineno}: endpoint {x} not in [0, {n})")
        if a == b:
            raise ValidationError(f"line {lineno}: self-loop ({a}, {b})")
        key = (min(a, b), max(a, b))
        if key in seen:
            raise ValidationError(f"line {lineno}: duplicate edge ({a}, {b}), first on line {seen[key]}")
        seen[key] = lineno
        edges.append((a, b))
    if n is None:
        raise ParseError("missing 'n=<int>' header")
    return UndirectedGraph(n, tuple(edges))


def format_graph(g: UndirectedGraph) -> str:
    return "".join([f"n={g.n}\n"] + [f"{a} {b}\n" for a, b in g.edges])


def indegree(o: Orientation, v: int) -> int:
    if not 0 <= v < o.graph.n:
        raise VertexRangeError(f"vertex {v} not in [0, {o.graph.n})")
    return o.indegrees[v]


def indegree_sequence(o: Orientation) -> tuple[int, ...]:
    return tuple(sorted(o.indegrees, reverse=True))


def lex_compare(s: Sequence[int], t: Sequence[int]) -> int:
    """Return -1, 0 or 1 as ``s`` is lexicographically less than, equal to or greater than ``t``."""
    if len(s) != len(t):
        raise ContractError(f"cannot compare sequences of lengths {len(s)} and {len(t)}")
    for a, b in zip(s, t):
        if a != b:
            return -1 if a < b else 1
    return 0


def reverse_path(o: Orientation, p: DirectedPath) -> Orientation:
    if not p.is_valid_in(o):
        raise ContractError(f"path {p.vertices} is not a directed path of the orientation")
    return o.flipped(p.arcs)


def format_orientation(o: Orientation) -> str:
    lines = [f"{i} {t} {h}\n" for i, (t, h) in enumerate(o.arcs)]
    lines.append(format_sequence_line(indegree_sequence(o)))
    return "".join(lines)


def format_sequence_line(seq: Sequence[int]) -> str:
    return "indegree_sequence=" + ",".join(map(str, seq)) + "\n"


def parse_orientation(g: UndirectedGraph, text: str) -> Orientation:
    """Read an orientation document (``<i> <tail> <head>`` lines) against ``g``.

    A trailing ``indegree_sequence=`` line is optional; when present it must agree.
    """
    arcs: dict[int, tuple[int, int]] = {}
    claimed = None
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        if line.startswith("indegree_sequence="):
            value = line.partition("=")[2]
            try:
                claimed = tuple(int(x) for x in value.split(",")) if value else ()
            except ValueError:
                raise ParseError(f"bad indegree sequence {value!r}", lineno) from None
            continue
        fields = line.split()
        if len(fields) != 3:
            raise ParseError(f"expected '<i> <tail> <head>', got {line!r}", lineno)
        try:
            i, t, h = map(int, fields)
        except ValueError:
            raise ParseError(f"non-integer field in {line!r}", lineno) from None
        if not 0 <= i < g.m:
            raise VertexRangeError(f"line {lineno}: edge index {i} not in [0, {g.m})")
        if {t, h} != set(g.edges[i]):
            raise ValidationError(f"line {lineno}: edge {i} is {g.edges[i]}, not {t}-{h}")
        if i in arcs:
            raise ValidationError(f"line {lineno}: edge {i} listed twice")
        arcs[i] = (t, h)
    if len(arcs) != g.m:
        missing = sorted(set(range(g.m)) - set(arcs))
        raise ParseError(f"orientation is missing edges {missing}")
    o = Orientation(g, tuple(0 if arcs[i] == g.edges[i] else 1 for i in range(g.m)))
    if claimed is not None and claimed != indegree_sequence(o):
        raise ValidationError(
            f"stated indegree sequence {claimed} does not match the arcs {indegree_sequence(o)}"
        )
    return o
