import os
import sys

import hypothesis
from hypothesis import strategies as st

sys.path.insert(0, os.path.dirname(__file__))

from lowdeg.graph import Graph, Ordering  # noqa: E402

hypothesis.settings.register_profile("default", max_examples=60, deadline=None)
hypothesis.settings.register_profile("fast", max_examples=10, deadline=None)
hypothesis.settings.load_profile(os.environ.get("HYPOTHESIS_PROFILE", "default"))


@st.composite
def graphs(draw, min_n=1, max_n=8, connected=False):
    n = draw(st.integers(min_n, max_n))
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    edges = draw(st.lists(st.sampled_from(pairs), unique=True)) if pairs else []
    if connected:
        # attach every vertex to an earlier one so the graph is connected
        for v in range(1, n):
            u = draw(st.integers(0, v - 1))
            edges.append((u, v))
    return Graph.from_edges(n, edges)


@st.composite
def graph_and_ordering(draw, **kw):
    G = draw(graphs(**kw))
    perm = draw(st.permutations(range(G.n)))
    return G, Ordering.from_positions(perm)


ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
