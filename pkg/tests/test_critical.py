import pytest
from hypothesis import given, settings

from critcolor.coloring.critical import (
    critical_subgraph,
    critical_vertex_subset,
    critical_vertices,
    is_critical_vertex,
    is_vertex_critical,
)
from critcolor.coloring.solver import chromatic_number
from critcolor.core.errors import EmptyGraph
from critcolor.graph.graph_core import Graph, complete_graph, cycle_graph, from_edge_list, min_degree

from .oracles import brute_is_critical_vertex
from .strategies import graphs


@pytest.mark.parametrize("n", [1, 2, 3, 6, 7])
def test_complete_graphs_are_critical(n):
    assert is_vertex_critical(complete_graph(n))


def test_odd_and_even_cycles():
    assert is_vertex_critical(cycle_graph(5))
    assert not is_vertex_critical(cycle_graph(6))


def test_figure1_is_critical(figure1):
    assert is_vertex_critical(figure1)
    assert critical_vertices(figure1) == frozenset(range(9))


def test_disconnected_graph_is_not_critical():
    two_triangles = from_edge_list(6, [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5)])
    assert not is_vertex_critical(two_triangles)
    assert critical_vertices(two_triangles) == frozenset()


def test_pendant_vertex_is_not_critical(k4_with_pendant):
    assert not is_critical_vertex(k4_with_pendant, 4)
    assert is_critical_vertex(k4_with_pendant, 0)
    assert critical_vertex_subset(k4_with_pendant) == [0, 1, 2, 3]


def test_empty_graph_raises():
    with pytest.raises(EmptyGraph):
        is_vertex_critical(Graph(0, ()))


@settings(max_examples=100, deadline=None)
@given(graphs(min_n=1, max_n=6))
def test_critical_vertices_match_brute_force(G):
    expected = frozenset(v for v in range(G.n) if brute_is_critical_vertex(G, v))
    assert critical_vertices(G) == expected


@settings(max_examples=100, deadline=None)
@given(graphs(min_n=1, max_n=7))
def test_critical_subgraph_keeps_chi(G):
    C = critical_subgraph(G)
    chi = chromatic_number(G)[0]
    assert chromatic_number(C)[0] == chi
    assert is_vertex_critical(C)
    # every vertex of a critical graph has degree at least chi - 1
    assert min_degree(C) >= chi - 1
