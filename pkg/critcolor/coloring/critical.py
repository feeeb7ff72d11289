"""
Criticality tests.

A vertex v is critical when chi(G - v) < chi(G). A graph is taken to be critical
when it is connected and every vertex is critical (vertex-criticality); reports
carry CRITICALITY_DEFINITION so the adopted reading is never implicit.
"""

from typing import List, Optional

from critcolor.core.budget import Budget
from critcolor.core.errors import EmptyGraph
from critcolor.coloring.solver import chromatic_number, k_colorable
from critcolor.graph.graph_core import Graph, VertexSet, delete_vertex, induced_subgraph, is_connected

CRITICALITY_DEFINITION = "vertex-critical"


def _require_vertices(G: Graph) -> None:
    if G.n == 0:
        raise EmptyGraph("criticality is undefined on the empty graph")


def is_critical_vertex(G: Graph, v: int, chi: Optional[int] = None, budget: Optional[Budget] = None) -> bool:
    if chi is None:
        chi, _ = chromatic_number(G, budget)
    H, _ = delete_vertex(G, v)
    return k_colorable(H, chi - 1, budget) is not None


def critical_vertices(G: Graph, budget: Optional[Budget] = None) -> VertexSet:
    _require_vertices(G)
    chi, _ = chromatic_number(G, budget)
    return frozenset(v for v in range(G.n) if is_critical_vertex(G, v, chi, budget))


def is_vertex_critical(G: Graph, budget: Optional[Budget] = None) -> bool:
    _require_vertices(G)
    if not is_connected(G):
        return False
    chi, _ = chromatic_number(G, budget)
    return all(is_critical_vertex(G, v, chi, budget) for v in range(G.n))


def critical_vertex_subset(G: Graph, budget: Optional[Budget] = None) -> List[int]:
    """
    Original labels of a vertex-critical induced subgraph with the same chi,
    found by deleting the lowest-index vertex whose removal keeps chi.
    """
    _require_vertices(G)
    chi, _ = chromatic_number(G, budget)
    labels = list(range(G.n))
    current = G
    while True:
        for v in range(current.n):
            H, _ = delete_vertex(current, v)
            if k_colorable(H, chi - 1, budget) is None:
                current = H
                del labels[v]
                break
        else:
            return labels


def critical_subgraph(G: Graph, budget: Optional[Budget] = None) -> Graph:
    H, _ = induced_subgraph(G, critical_vertex_subset(G, budget))
    return H
