from functools import cached_property
from typing import Optional

from critcolor.core.budget import Budget
from critcolor.coloring.coloring import Coloring
from critcolor.coloring.critical import is_vertex_critical
from critcolor.coloring.solver import chromatic_number
from critcolor.graph.clique import clique_number
from critcolor.graph.graph_core import Graph, VertexSet, induced_subgraph


class GraphProfile:
    """
    Lazily computed invariants of one graph.

    Every quantity is computed at most once and only when first read, so the
    statement predicates can evaluate their cheap clauses before the exact
    solvers run.
    """

    def __init__(self, graph: Graph, budget: Optional[Budget] = None):
        self.graph = graph
        self.budget = budget

    @property
    def n(self) -> int:
        return self.graph.n

    @cached_property
    def degrees(self) -> tuple:
        return tuple(len(nbrs) for nbrs in self.graph.adj)

    @cached_property
    def delta(self) -> int:
        """Maximum degree; 0 on the empty graph."""
        return max(self.degrees, default=0)

    @cached_property
    def min_degree(self) -> int:
        return min(self.degrees, default=0)

    @cached_property
    def theta(self) -> Optional[int]:
        """Ore-degree; None when the graph has no edges."""
        return max((self.degrees[u] + self.degrees[v] for u, v in self.graph.edges()), default=None)

    @cached_property
    def _chromatic(self) -> tuple:
        return chromatic_number(self.graph, self.budget)

    @property
    def chi(self) -> int:
        return self._chromatic[0]

    @property
    def chi_witness(self) -> Coloring:
        return self._chromatic[1]

    @cached_property
    def omega(self) -> int:
        return clique_number(self.graph, self.budget)

    @cached_property
    def high_set(self) -> VertexSet:
        return frozenset(v for v in range(self.n) if self.degrees[v] >= self.chi)

    @cached_property
    def high_subgraph(self) -> Graph:
        H, _ = induced_subgraph(self.graph, self.high_set)
        return H

    @cached_property
    def omega_h(self) -> int:
        return clique_number(self.high_subgraph, self.budget)

    @cached_property
    def is_complete(self) -> bool:
        return self.graph.is_complete()

    @cached_property
    def is_critical(self) -> bool:
        return self.n > 0 and is_vertex_critical(self.graph, self.budget)
