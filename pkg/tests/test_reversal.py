import random

import pytest
from hypothesis import given, settings, strategies as st

import brute
from conftest import graphs, orientations
from lexorient.connectivity import is_connected, find_bridges, is_strongly_connected, two_reaches
from lexorient.generators import complete, random_bridgeless, small_graphs, wheel
from lexorient.graph import ContractError, InfeasibleGraph, Orientation, UndirectedGraph, indegree_sequence
from lexorient.reversal import (
    find_reversible_path,
    find_strongly_reversible_path,
    initial_strong_orientation,
    path_reversal,
    random_strong_orientation,
    sc_path_reversal,
    shortest_path,
)

TRIANGLE = UndirectedGraph(3, ((0, 1), (1, 2), (0, 2)))
CYCLE3 = Orientation.from_arcs(TRIANGLE, [(0, 1), (1, 2), (2, 0)])
STAR = UndirectedGraph(4, ((0, 1), (0, 2), (0, 3)))
# brute force over K5: strong, indegrees [1, 1, 2, 3, 3]; 0 and 1 two-reach 3
K5_GAPPED = Orientation.from_arcs(
    complete(5), [(0, 1), (0, 2), (0, 3), (4, 0), (1, 2), (1, 3), (1, 4), (2, 3), (2, 4), (3, 4)]
)


def potential(o):
    return sum(d * d for d in o.indegrees)


def feasible(g):
    return is_connected(g) and not find_bridges(g)


class TestInitialOrientation:
    def test_triangle(self):
        o = initial_strong_orientation(TRIANGLE)
        assert is_strongly_connected(o)
        assert indegree_sequence(o) == (1, 1, 1)

    def test_bridge(self):
        with pytest.raises(InfeasibleGraph, match="edge 0") as info:
            initial_strong_orientation(UndirectedGraph(2, ((0, 1),)))
        assert info.value.bridge == 0

    def test_disconnected(self):
        g = UndirectedGraph(6, ((0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5)))
        with pytest.raises(InfeasibleGraph, match="vertices 0 and 3") as info:
            initial_strong_orientation(g)
        assert info.value.components == (0, 3)

    def test_all_small_bridgeless(self):
        for g in small_graphs(6):
            if feasible(g) and g.m <= 12:
                assert brute.strongly_connected(g.n, initial_strong_orientation(g).arcs)

    def test_random_start_is_strong_and_seeded(self):
        g = wheel(6)
        a = random_strong_orientation(g, 3)
        assert is_strongly_connected(a)
        assert a == random_strong_orientation(g, 3)


class TestFindReversible:
    def test_cycle(self):
        assert find_reversible_path(CYCLE3) is None

    def test_star_inward(self):
        o = Orientation.from_arcs(STAR, [(1, 0), (2, 0), (3, 0)])
        p = find_reversible_path(o)
        assert p.vertices == (1, 0)

    @given(orientations())
    def test_exists_iff_some_pair(self, o):
        deg = o.indegrees
        n = o.graph.n
        pairs = [
            (u, v) for u in range(n) for v in range(n)
            if deg[u] < deg[v] - 1 and v in brute.reach(n, o.arcs, u)
        ]
        p = find_reversible_path(o)
        assert (p is None) == (not pairs)
        if p is not None:
            assert p.is_valid_in(o)
            assert deg[p.source] < deg[p.target] - 1
            # target is the highest-indegree vertex that has an eligible source
            assert p.target == min(pairs, key=lambda uv: (-deg[uv[1]], uv[1]))[1]
            eligible = [u for u, v in pairs if v == p.target]
            assert p.source == min(eligible, key=lambda u: (deg[u], u))


class TestFindStronglyReversible:
    def test_cycle(self):
        assert find_strongly_reversible_path(CYCLE3) is None

    def test_k5_gapped(self):
        p = find_strongly_reversible_path(K5_GAPPED)
        assert p.vertices == (0, 3)
        assert two_reaches(K5_GAPPED, 0, 3) is not None

    def test_requires_strong(self):
        g = UndirectedGraph(3, ((0, 1), (1, 2)))
        with pytest.raises(ContractError):
            find_strongly_reversible_path(Orientation.from_arcs(g, [(0, 1), (1, 2)]))

    @settings(max_examples=60)
    @given(st.integers(3, 8), st.data())
    def test_exists_iff_some_pair(self, n, data):
        m = data.draw(st.integers(n, min(14, n * (n - 1) // 2)))
        o = random_strong_orientation(random_bridgeless(n, m, data.draw(st.integers(0, 999))), data.draw(st.integers(0, 999)))
        deg = o.indegrees
        pairs = [(u, v) for u in range(n) for v in range(n) if deg[u] < deg[v] - 1 and brute.two_reaches(o.arcs, u, v)]
        p = find_strongly_reversible_path(o)
        assert (p is None) == (not pairs)
        if p is not None:
            assert (p.source, p.target) in pairs
            assert is_strongly_connected(o.flipped(p.arcs))


def test_shortest_path_lexicographic():
    # two shortest 0 -> 3 routes: via 1 and via 2
    g = UndirectedGraph(4, ((0, 2), (0, 1), (2, 3), (1, 3)))
    o = Orientation.from_arcs(g, [(0, 2), (0, 1), (2, 3), (1, 3)])
    assert shortest_path(o, 0, 3).vertices == (0, 1, 3)
    assert shortest_path(o, 3, 0) is None


class TestPathReversal:
    @pytest.mark.parametrize("seed", range(4))
    def test_triangle(self, seed):
        # brute.min_lex(triangle, strong=False) == (1, 1, 1)
        assert indegree_sequence(path_reversal(TRIANGLE, seed)[0]) == (1, 1, 1)

    def test_edgeless(self):
        o, trace = path_reversal(UndirectedGraph(4), 9)
        assert trace.steps == ()
        assert indegree_sequence(o) == (0, 0, 0, 0)

    @pytest.mark.parametrize("seed", range(4))
    def test_k4(self, seed):
        # brute.min_lex(K4, strong=False) == (2, 2, 1, 1)
        assert indegree_sequence(path_reversal(complete(4), seed)[0]) == (2, 2, 1, 1)

    @given(graphs(max_n=7), st.integers(0, 1000))
    def test_fixed_point_and_trace(self, g, seed):
        o, trace = path_reversal(g, seed)
        assert find_reversible_path(o) is None
        states = trace.replay()
        assert states[-1] == o
        for step, before, after in zip(trace.steps, states, states[1:]):
            assert step.indegree_source < step.indegree_target - 1
            assert potential(after) <= potential(before) - 2
        assert len(trace.steps) <= g.m ** 2 / 2


class TestScPathReversal:
    def test_triangle(self):
        o, trace = sc_path_reversal(TRIANGLE)
        assert indegree_sequence(o) == (1, 1, 1)
        assert trace.steps == ()

    def test_k4(self):
        assert indegree_sequence(sc_path_reversal(complete(4))[0]) == (2, 2, 1, 1)

    def test_wheel5(self):
        # brute.min_lex(W5, strong=True) == (2, 2, 2, 1, 1)
        g = wheel(5)
        assert g.m == 8
        assert indegree_sequence(sc_path_reversal(g)[0]) == (2, 2, 2, 1, 1)

    @pytest.mark.parametrize("g", [UndirectedGraph(0), UndirectedGraph(1)])
    def test_degenerate(self, g):
        o, trace = sc_path_reversal(g)
        assert o.direction == () and trace.steps == ()

    def test_infeasible(self):
        with pytest.raises(InfeasibleGraph):
            sc_path_reversal(UndirectedGraph(2, ((0, 1),)))
        with pytest.raises(InfeasibleGraph):
            sc_path_reversal(UndirectedGraph(2))

    @settings(max_examples=60)
    @given(st.integers(3, 8), st.data())
    def test_trace_invariants(self, n, data):
        m = data.draw(st.integers(n, min(14, n * (n - 1) // 2)))
        g = random_bridgeless(n, m, data.draw(st.integers(0, 10**6)))
        seed = data.draw(st.integers(0, 10**6))
        o, trace = sc_path_reversal(g, seed, random_start=True)
        assert find_strongly_reversible_path(o) is None
        states = trace.replay()
        assert states[0] == trace.initial and states[-1] == o
        for step, before, after in zip(trace.steps, states, states[1:]):
            assert step.indegree_source == before.indegrees[step.source]
            assert step.indegree_source < step.indegree_target - 1
            assert two_reaches(before, step.source, step.target) is not None
            assert is_strongly_connected(after)
            assert potential(after) <= potential(before) - 2
        assert (o, trace) == sc_path_reversal(g, seed, random_start=True)

    def test_trace_format(self):
        o, trace = sc_path_reversal(K5_GAPPED.graph, 1, random_start=True)
        assert len(trace.steps) == 2
        lines = trace.format().splitlines()
        steps = [line for line in lines if line.startswith("step=")]
        assert len(steps) == len(trace.steps)
        assert lines[-1].startswith("indegree_sequence=")
        m = K5_GAPPED.graph.m
        assert lines[m].startswith("indegree_sequence=")
        for k, line in enumerate(steps):
            s = trace.steps[k]
            assert line == (
                f"step={k} u={s.source} v={s.target} path={','.join(map(str, s.path))} "
                f"din_u={s.indegree_source} din_v={s.indegree_target}"
            )

    def test_seed_independent_optimum(self):
        rng = random.Random(11)
        for k in range(15):
            n = rng.randint(4, 8)
            g = random_bridgeless(n, rng.randint(n, min(14, n * (n - 1) // 2)), k)
            seqs = {indegree_sequence(sc_path_reversal(g, s, random_start=True)[0]) for s in range(4)}
            seqs.add(indegree_sequence(sc_path_reversal(g)[0]))
            assert len(seqs) == 1
