import pytest

from ramsey_abc.graph import Graph


@pytest.fixture
def g1() -> Graph:
    """5-vertex worked example: edges 12, 23, 24, 34, 45 (1-indexed)."""
    return Graph.from_edges(5, [(0, 1), (1, 2), (1, 3), (2, 3), (3, 4)])


@pytest.fixture
def c5() -> Graph:
    return Graph.cycle(5)
