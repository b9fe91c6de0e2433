import random

import pytest
from hypothesis import strategies as st

from lexorient.graph import Orientation, UndirectedGraph
from lexorient.reversal import random_strong_orientation
from lexorient.generators import random_bridgeless


@st.composite
def graphs(draw, max_n=7, min_n=0):
    n = draw(st.integers(min_n, max_n))
    pairs = [(a, b) for a in range(n) for b in range(a + 1, n)]
    chosen = draw(st.lists(st.sampled_from(pairs), unique=True) if pairs else st.just([]))
    flipped = [(b, a) if draw(st.booleans()) else (a, b) for a, b in chosen]
    return UndirectedGraph(n, tuple(flipped))


@st.composite
def orientations(draw, max_n=7, min_n=0):
    g = draw(graphs(max_n=max_n, min_n=min_n))
    return Orientation(g, tuple(draw(st.lists(st.booleans(), min_size=g.m, max_size=g.m))))


@st.composite
def strong_orientations(draw, max_n=7):
    n = draw(st.integers(3, max_n))
    m = draw(st.integers(n, min(n * (n - 1) // 2, 14)))
    g = random_bridgeless(n, m, draw(st.integers(0, 10**6)))
    return random_strong_orientation(g, draw(st.integers(0, 10**6)))


def random_simple_path(o, u, rng: random.Random):
    """A randomized-DFS directed path from ``u`` to a random vertex it reaches, as a vertex list."""
    order = [u]
    parent = {u: None}
    stack = [u]
    while stack:
        x = stack.pop()
        nbrs = [y for y, _ in o.out_arcs[x] if y not in parent]
        rng.shuffle(nbrs)
        for y in nbrs:
            if y not in parent:
                parent[y] = x
                order.append(y)
                stack.append(y)
    v = rng.choice(order)
    path = [v]
    while parent[path[-1]] is not None:
        path.append(parent[path[-1]])
    return path[::-1]


# --- acceptance summary -------------------------------------------------------

_criteria: dict[int, tuple[str, str]] = {}


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    report = outcome.get_result()
    marker = item.get_closest_marker("criterion")
    if marker is None:
        return
    number, title = marker.args
    if report.when == "call" or (report.when == "setup" and report.failed):
        _criteria[number] = (title, "PASS" if report.passed else "FAIL")


def pytest_terminal_summary(terminalreporter):
    if not _criteria:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(_criteria):
        title, verdict = _criteria[number]
        terminalreporter.write_line(f"[{verdict}] criterion {number:2d}: {title}")
