import random

import pytest
from hypothesis import assume, given, settings
from hypothesis.strategies import integers

from critcolor.coloring.coloring import is_proper
from critcolor.coloring.critical import critical_vertices
from critcolor.coloring.solver import chromatic_number
from critcolor.core.budget import Budget
from critcolor.core.errors import NotColorableInForm, SchemeMismatch, Timeout
from critcolor.graph.graph_core import complete_graph, from_edge_list
from critcolor.harness.generators import random_critical
from critcolor.mozhan.partition import PartitionScheme, SearchMode, internal_edges
from critcolor.mozhan.search import find_minimal_partitioned_coloring

from .oracles import brute_min_internal_edges
from .strategies import graphs


def test_k6_minimum_is_forced(k6):
    pi = find_minimal_partitioned_coloring(k6, PartitionScheme((2, 3)), 0)
    assert pi.singleton == 0
    assert internal_edges(k6, pi) == 4
    assert pi.provenance is SearchMode.EXACT


def test_c5_minimum(c5):
    pi = find_minimal_partitioned_coloring(c5, PartitionScheme((2,)), 0)
    assert internal_edges(c5, pi) == brute_min_internal_edges(c5, 0, (2,)) == 3


def test_scheme_mismatch(k6):
    with pytest.raises(SchemeMismatch):
        find_minimal_partitioned_coloring(k6, PartitionScheme((2, 2)), 0)


def test_non_critical_singleton(k4_with_pendant):
    with pytest.raises(NotColorableInForm):
        find_minimal_partitioned_coloring(k4_with_pendant, PartitionScheme((1, 2)), 4)
    with pytest.raises(NotColorableInForm):
        find_minimal_partitioned_coloring(
            k4_with_pendant, PartitionScheme((1, 2)), 4, mode=SearchMode.LOCAL_SEARCH
        )


def test_local_search_is_deterministic(figure1):
    runs = [
        find_minimal_partitioned_coloring(figure1, PartitionScheme((2, 2)), 0, SearchMode.LOCAL_SEARCH, seed=7)
        for _ in range(2)
    ]
    assert runs[0] == runs[1]
    assert runs[0].provenance is SearchMode.LOCAL_SEARCH
    assert is_proper(figure1, runs[0].coloring)


def test_exact_never_worse_than_local(figure1):
    for x in (0, 4, 5):
        local = find_minimal_partitioned_coloring(figure1, PartitionScheme((2, 2)), x, SearchMode.LOCAL_SEARCH)
        exact = find_minimal_partitioned_coloring(figure1, PartitionScheme((2, 2)), x)
        assert internal_edges(figure1, exact) <= internal_edges(figure1, local)
        assert internal_edges(figure1, exact) == brute_min_internal_edges(figure1, x, (2, 2))


def test_exact_search_respects_budget():
    G = complete_graph(9)
    with pytest.raises(Timeout):
        find_minimal_partitioned_coloring(G, PartitionScheme((4, 4)), 0, budget=Budget.exhausted())


def _schemes(chi, rng):
    if chi >= 5:
        r1 = rng.randint(2, chi - 3)
        return [(chi - 1,), (r1, chi - 1 - r1)]
    return [(chi - 1,)]


@settings(max_examples=60, deadline=None)
@given(graphs(min_n=3, max_n=7), integers(min_value=0, max_value=1000))
def test_exact_matches_brute_force(G, seed):
    chi, _ = chromatic_number(G)
    assume(chi >= 2)
    critical = sorted(critical_vertices(G))
    assume(critical)
    rng = random.Random(seed)
    x = rng.choice(critical)
    for sizes in _schemes(chi, rng):
        pi = find_minimal_partitioned_coloring(G, PartitionScheme(sizes), x)
        assert pi.singleton == x
        assert is_proper(G, pi.coloring)
        assert internal_edges(G, pi) == brute_min_internal_edges(G, x, sizes)


@settings(max_examples=20, deadline=None)
@given(integers(min_value=0, max_value=10_000))
def test_exact_on_random_critical_graphs(seed):
    G = random_critical(7, seed)
    chi, _ = chromatic_number(G)
    assume(chi >= 3)
    scheme = PartitionScheme((chi - 1,))
    pi = find_minimal_partitioned_coloring(G, scheme, 0)
    assert internal_edges(G, pi) == brute_min_internal_edges(G, 0, (chi - 1,))


def test_single_edge():
    G = from_edge_list(2, [(0, 1)])
    pi = find_minimal_partitioned_coloring(G, PartitionScheme((1,)), 1)
    assert pi.coloring.assignment == (1, 0)
    assert internal_edges(G, pi) == 0
