import os
import sys

import pytest
from hypothesis import strategies as st

sys.path.insert(0, os.path.dirname(__file__))

from bipturan.bigraph import BipartiteGraph, from_edge_list  # noqa: E402


@st.composite
def graphs(draw, max_side: int = 5, min_side: int = 1) -> BipartiteGraph:
    m = draw(st.integers(min_side, max_side))
    n = draw(st.integers(min_side, max_side))
    rows = tuple(draw(st.integers(0, (1 << n) - 1)) for _ in range(m))
    return BipartiteGraph(m, n, rows)


def cycle_graph(s: int) -> BipartiteGraph:
    """The cycle x0 y0 x1 y1 ... x_{s-1} y_{s-1}."""
    return from_edge_list(s, s, [(i, i) for i in range(s)] + [((i + 1) % s, i) for i in range(s)])


@pytest.fixture
def c8() -> BipartiteGraph:
    return cycle_graph(4)
