import os
from pathlib import Path

import pytest
from hypothesis import HealthCheck, settings, strategies as st

from twsolve.families import random_connected_graph
from twsolve.graph import Graph, vset

settings.register_profile(
    "suite",
    deadline=None,
    max_examples=60,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.load_profile("suite")

INSTANCE_DIR = Path(os.environ.get("TW_INSTANCES", Path(__file__).resolve().parent.parent / "instances"))


def mask(*vertices: int) -> int:
    return vset(vertices)


@st.composite
def connected_graphs(draw, max_n: int = 9) -> Graph:
    n = draw(st.integers(min_value=2, max_value=max_n))
    extra = draw(st.integers(min_value=0, max_value=2 * n))
    seed = draw(st.integers(min_value=0, max_value=10**6))
    return random_connected_graph(n, n - 1 + extra, seed)


@st.composite
def vertex_subsets(draw, g: Graph, min_size: int = 0) -> int:
    members = draw(
        st.lists(st.integers(min_value=0, max_value=g.n - 1), min_size=min_size, unique=True)
    )
    return vset(members)


@pytest.fixture
def tmp_graph_file(tmp_path):
    def write(name: str, text: str) -> str:
        p = tmp_path / name
        p.write_text(text)
        return str(p)

    return write
