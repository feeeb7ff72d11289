import time

import pytest
from hypothesis import given, settings

from critcolor.coloring.coloring import Coloring, color_classes, greedy_coloring, is_proper
from critcolor.coloring.solver import chromatic_number, k_colorable
from critcolor.core.budget import Budget
from critcolor.core.errors import InvalidColoring, SizeMismatch, Timeout
from critcolor.graph.clique import clique_number, contains_clique, is_clique, max_clique
from critcolor.graph.graph_core import Graph, complete_graph, cycle_graph, from_edge_list

from .oracles import brute_chromatic_number, brute_clique_number
from .strategies import graphs


# ==================== CLIQUES ====================


def test_clique_number_examples(figure1, c5, k6):
    assert clique_number(k6) == 6
    assert clique_number(c5) == 2
    assert clique_number(figure1) == 4
    assert clique_number(Graph(0, ())) == 0


def test_contains_clique(figure1):
    found, witness = contains_clique(figure1, 4)
    assert found and len(witness) == 4 and is_clique(figure1, witness)
    assert not contains_clique(figure1, 5).found
    assert contains_clique(figure1, 0) == (True, frozenset())
    assert not contains_clique(complete_graph(3), 4).found


@settings(max_examples=200, deadline=None)
@given(graphs(max_n=7))
def test_clique_number_matches_brute_force(G):
    witness = max_clique(G)
    assert is_clique(G, witness)
    assert len(witness) == clique_number(G) == brute_clique_number(G)


# ==================== COLORINGS ====================


def test_coloring_validation():
    with pytest.raises(InvalidColoring):
        Coloring((0, 2), 2)
    with pytest.raises(InvalidColoring):
        Coloring((0, 0), 2)
    assert Coloring((0, 0), 2, allow_unused=True).colors_used == 1
    with pytest.raises(SizeMismatch):
        is_proper(complete_graph(3), Coloring.of([0, 1]))


def test_color_classes():
    c = Coloring.of([0, 1, 0, 2])
    assert color_classes(c) == [frozenset({0, 2}), frozenset({1}), frozenset({3})]


@given(graphs())
def test_greedy_coloring_is_proper(G):
    c = greedy_coloring(G)
    assert is_proper(G, c)
    assert c.colors_used == c.k


def test_chromatic_number_examples(figure1, c5, k6, petersen):
    assert chromatic_number(k6)[0] == 6
    assert chromatic_number(c5)[0] == 3
    assert chromatic_number(cycle_graph(6))[0] == 2
    assert chromatic_number(figure1)[0] == 5
    assert chromatic_number(petersen)[0] == 3
    assert chromatic_number(Graph(0, ())) == (0, Coloring((), 0))
    assert chromatic_number(from_edge_list(3, []))[0] == 1


def test_k_colorable(figure1, c5):
    assert k_colorable(c5, 2) is None
    witness = k_colorable(c5, 3)
    assert witness is not None and is_proper(c5, witness)
    assert k_colorable(figure1, 4) is None
    assert k_colorable(Graph(0, ()), 0) is not None
    assert k_colorable(complete_graph(2), 0) is None
    with pytest.raises(ValueError):
        k_colorable(c5, -1)


@settings(max_examples=200, deadline=None)
@given(graphs(max_n=6))
def test_chromatic_number_matches_brute_force(G):
    chi, witness = chromatic_number(G)
    assert chi == brute_chromatic_number(G)
    assert is_proper(G, witness)
    assert witness.k == chi == witness.colors_used


@pytest.mark.slow
@settings(max_examples=30, deadline=None)
@given(graphs(min_n=7, max_n=7))
def test_chromatic_number_matches_brute_force_on_seven_vertices(G):
    chi, witness = chromatic_number(G)
    assert chi == brute_chromatic_number(G)
    assert is_proper(G, witness)


@given(graphs(max_n=6))
def test_k_colorable_threshold(G):
    chi, _ = chromatic_number(G)
    if chi > 0:
        assert k_colorable(G, chi - 1) is None
    result = k_colorable(G, chi)
    assert result is not None and is_proper(G, result)


def test_budget_exhaustion_raises_timeout():
    with pytest.raises(Timeout):
        Budget.exhausted().tick()


def test_budget_expires_on_the_clock():
    budget = Budget(1)
    assert not Budget(60_000).expired
    time.sleep(0.01)
    assert budget.expired
    with pytest.raises(Timeout):
        for _ in range(1000):
            budget.tick()


def test_unlimited_budget_never_fires():
    budget = Budget.unlimited()
    for _ in range(1000):
        budget.tick()
    assert not Budget(0).expired
    assert not Budget(-5).expired
