"""
Degree structure relative to the chromatic number: H(G), the low/high
classification and the Ore-degree.
"""

from enum import Enum
from typing import Dict, Optional, Sequence, Tuple

from critcolor.core.budget import Budget
from critcolor.core.errors import NoEdges, OutOfRange
from critcolor.graph.graph_core import Graph, VertexSet
from critcolor.structure.profile import GraphProfile


class DegreeClass(str, Enum):
    DEFICIENT = "deficient"  # d(v) < chi - 1
    LOW = "low"  # d(v) = chi - 1
    HIGH = "high"  # d(v) >= chi


def _profile(G: Graph, profile: Optional[GraphProfile], budget: Optional[Budget]) -> GraphProfile:
    return profile if profile is not None else GraphProfile(G, budget)


def high_subgraph(
    G: Graph, profile: Optional[GraphProfile] = None, budget: Optional[Budget] = None
) -> Tuple[Graph, VertexSet]:
    """H(G): the subgraph induced on vertices of degree at least chi(G), with its vertex set in G."""
    p = _profile(G, profile, budget)
    return p.high_subgraph, p.high_set


def classify(
    G: Graph, profile: Optional[GraphProfile] = None, budget: Optional[Budget] = None
) -> Dict[int, DegreeClass]:
    p = _profile(G, profile, budget)
    classes = {}
    for v in range(G.n):
        d = p.degrees[v]
        if d >= p.chi:
            classes[v] = DegreeClass.HIGH
        elif d == p.chi - 1:
            classes[v] = DegreeClass.LOW
        else:
            classes[v] = DegreeClass.DEFICIENT
    return classes


def low_vertices(G: Graph, chi: int) -> VertexSet:
    return frozenset(v for v in range(G.n) if len(G.adj[v]) == chi - 1)


def ore_degree_edge(G: Graph, edge: Sequence[int]) -> int:
    u, v = edge
    for w in (u, v):
        if not 0 <= w < G.n:
            raise OutOfRange(w, G.n)
    if not G.has_edge(u, v):
        raise NoEdges(f"({u}, {v}) is not an edge")
    return len(G.adj[u]) + len(G.adj[v])


def ore_degree(G: Graph) -> int:
    """theta(G): the maximum endpoint degree sum over all edges."""
    theta = GraphProfile(G).theta
    if theta is None:
        raise NoEdges("Ore-degree is undefined on a graph without edges")
    return theta
