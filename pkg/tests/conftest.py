import networkx as nx
import pytest

from critcolor.core.config import reset_settings
from critcolor.graph.graph_core import Graph, complete_graph, cycle_graph, from_edge_list
from critcolor.harness.generators import fixture_figure1


@pytest.fixture(autouse=True)
def _fresh_settings(monkeypatch):
    for name in ("CRITCOLOR_BUDGET_MS", "CRITCOLOR_WORKERS", "CRITCOLOR_LOG_LEVEL"):
        monkeypatch.delenv(name, raising=False)
    reset_settings()
    yield
    reset_settings()


@pytest.fixture
def figure1() -> Graph:
    return fixture_figure1()


@pytest.fixture
def petersen() -> Graph:
    return Graph.from_networkx(nx.petersen_graph())


@pytest.fixture
def k4() -> Graph:
    return complete_graph(4)


@pytest.fixture
def k6() -> Graph:
    return complete_graph(6)


@pytest.fixture
def c5() -> Graph:
    return cycle_graph(5)


@pytest.fixture
def k4_with_pendant() -> Graph:
    """chi = max degree = 4."""
    return from_edge_list(5, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3), (0, 4)])
