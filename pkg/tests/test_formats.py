import pytest
from hypothesis import given

from critcolor.core.errors import MalformedEncoding
from critcolor.graph.formats import (
    from_graph6,
    parse_dimacs,
    parse_edge_list,
    to_dimacs,
    to_edge_list,
    to_graph6,
)
from critcolor.graph.graph_core import complete_graph

from .strategies import graphs


def test_graph6_known_strings():
    assert to_graph6(complete_graph(4)) == "C~"
    assert from_graph6("C~") == complete_graph(4)


def test_graph6_header_and_newline():
    assert from_graph6(">>graph6<<C~\n") == complete_graph(4)


@pytest.mark.parametrize("text", ["", "   ", "C\x01", "C~~~~"])
def test_graph6_rejects_garbage(text):
    with pytest.raises(MalformedEncoding):
        from_graph6(text)


@given(graphs(max_n=9))
def test_graph6_round_trip(G):
    assert from_graph6(to_graph6(G)) == G


def test_dimacs():
    text = ["c a triangle", "p edge 3 3", "e 1 2", "e 2 3", "e 1 3"]
    G = parse_dimacs(text)
    assert G == complete_graph(3)
    assert parse_dimacs(to_dimacs(G).splitlines()) == G


@pytest.mark.parametrize(
    "text",
    [
        ["e 1 2"],
        ["p edge 3 1", "e 1 4"],
        ["p edge 3 1", "e 1 1"],
        ["p edge x 1"],
        ["p edge 3 1", "x 1 2"],
    ],
)
def test_dimacs_rejects_malformed(text):
    with pytest.raises(MalformedEncoding):
        parse_dimacs(text)


def test_edge_list_integers_and_labels():
    G = parse_edge_list(["# a path", "3", "0 1", "1 2"])
    assert sorted(G.edges()) == [(0, 1), (1, 2)]
    H = parse_edge_list(["3", "a b", "b c", "c a"])
    assert H == complete_graph(3)
    assert parse_edge_list(to_edge_list(G).splitlines()) == G


@pytest.mark.parametrize("text", [[], ["x"], ["2", "0 1 2"], ["2", "0 2"], ["2", "a b", "c d"]])
def test_edge_list_rejects_malformed(text):
    with pytest.raises(MalformedEncoding):
        parse_edge_list(text)
