import networkx as nx
import pytest
from hypothesis import assume, given, settings

from critcolor.coloring.brooks import brooks_coloring
from critcolor.coloring.coloring import is_proper
from critcolor.core.errors import Disconnected, IsComplete, IsOddCycle
from critcolor.graph.graph_core import Graph, complete_graph, cycle_graph, from_edge_list, max_degree

from .strategies import connected_graphs


def _check(G):
    c = brooks_coloring(G)
    delta = max_degree(G)
    assert is_proper(G, c)
    assert c.k == delta == c.colors_used


def test_petersen(petersen):
    _check(petersen)


def test_even_cycle_and_path():
    _check(cycle_graph(6))
    _check(from_edge_list(4, [(0, 1), (1, 2), (2, 3)]))


def test_figure1(figure1):
    _check(figure1)


@pytest.mark.parametrize(
    "G",
    [
        Graph.from_networkx(nx.cubical_graph()),
        Graph.from_networkx(nx.complete_bipartite_graph(3, 3)),
        Graph.from_networkx(nx.circulant_graph(8, [1, 2])),
        # cubic with a bridge 4-9, so 4 and 9 are cut vertices
        from_edge_list(
            10,
            [(0, 2), (0, 3), (1, 2), (1, 3), (2, 3), (0, 4), (1, 4),
             (5, 7), (5, 8), (6, 7), (6, 8), (7, 8), (5, 9), (6, 9), (4, 9)],
        ),
    ],
)
def test_regular_and_cut_vertex_cases(G):
    _check(G)


def test_excluded_families():
    with pytest.raises(IsComplete):
        brooks_coloring(complete_graph(5))
    with pytest.raises(IsOddCycle):
        brooks_coloring(cycle_graph(7))
    with pytest.raises(Disconnected):
        brooks_coloring(from_edge_list(4, [(0, 1), (2, 3)]))
    with pytest.raises(Disconnected):
        brooks_coloring(Graph(1, (frozenset(),)))


@settings(max_examples=300, deadline=None)
@given(connected_graphs(min_n=2, max_n=9))
def test_random_connected_graphs(G):
    assume(not G.is_complete())
    assume(not (max_degree(G) == 2 and G.edge_count == G.n and G.n % 2 == 1))
    _check(G)
