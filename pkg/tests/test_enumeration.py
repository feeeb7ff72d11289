from itertools import combinations

import pytest

from critcolor.core.errors import InvalidParameter, RangeTooLarge
from critcolor.graph.graph_core import complete_graph, from_edge_list, min_degree
from critcolor.harness.enumeration import exhaustive_min_degree_scan


def _brute_min_degree_graphs(n, min_deg):
    pairs = list(combinations(range(n), 2))
    found = set()
    for mask in range(1 << len(pairs)):
        G = from_edge_list(n, [p for k, p in enumerate(pairs) if mask >> k & 1])
        if min_degree(G) >= min_deg:
            found.add(frozenset(G.edges()))
    return found


def test_only_complete_graph():
    graphs = [e.graph for e in exhaustive_min_degree_scan(7, 6)]
    assert graphs == [complete_graph(7)]


def test_k7_minus_matchings():
    corpus = exhaustive_min_degree_scan(7, 5)
    # matchings of K7: 1 + 21 + 105 + 105
    assert len(corpus) == 232
    assert all(min_degree(e.graph) >= 5 for e in corpus)


def test_matches_brute_force():
    scanned = [frozenset(e.graph.edges()) for e in exhaustive_min_degree_scan(6, 3)]
    assert len(scanned) == len(set(scanned))
    assert set(scanned) == _brute_min_degree_graphs(6, 3)


def test_labels_are_stable():
    first = [e.label for e in exhaustive_min_degree_scan(5, 3)]
    assert first == [e.label for e in exhaustive_min_degree_scan(5, 3)]
    assert first[0] == "exhaustive(n=5,min_deg=3):0"


def test_impossible_degree_is_empty():
    assert len(exhaustive_min_degree_scan(4, 4)) == 0


@pytest.mark.parametrize("n, min_deg", [(11, 10), (8, 3), (10, 5)])
def test_range_too_large(n, min_deg):
    with pytest.raises(RangeTooLarge):
        exhaustive_min_degree_scan(n, min_deg)


def test_bad_order():
    with pytest.raises(InvalidParameter):
        exhaustive_min_degree_scan(0, 0)
