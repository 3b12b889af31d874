import pytest

from mincollapse import build_graph

# 8-vertex demo network: two absorbing components around the non-adjacent
# hub pair (e, s), plus a pendant component {x} that absorbs nothing.
DEMO_EDGES = [
    ("t", "a"), ("t", "l"), ("t", "e"), ("l", "e"), ("e", "x"),
    ("e", "d"), ("e", "b"), ("l", "s"), ("b", "s"), ("d", "b"),
]


@pytest.fixture
def demo():
    return build_graph(DEMO_EDGES)


@pytest.fixture
def demo_text():
    lines = ["# demo network"] + [f"{u} {v}" for u, v in DEMO_EDGES]
    return "\n".join(lines) + "\n"


def labelset(graph, vertices):
    return set(graph.sorted_labels(vertices))
