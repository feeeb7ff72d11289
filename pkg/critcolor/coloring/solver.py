"""
Exact colouring decisions.

k_colorable is a DSATUR backtracking search: a maximum clique is precoloured
(which both refutes k < omega immediately and breaks colour symmetry), then the
uncoloured vertex of highest saturation is branched on, lowest index first on
ties, and a fresh colour is only ever opened one above the largest in use.
"""

import logging
from typing import List, Optional, Tuple

from critcolor.core.budget import Budget, tick
from critcolor.coloring.coloring import Coloring, greedy_coloring
from critcolor.graph.clique import max_clique
from critcolor.graph.graph_core import Graph, VertexSet

logger = logging.getLogger(__name__)


def _search(G: Graph, k: int, clique: VertexSet, budget: Optional[Budget]) -> Optional[List[int]]:
    n = G.n
    colors = [-1] * n
    # counts[v][c]: coloured neighbours of v holding colour c
    counts = [[0] * k for _ in range(n)]
    saturation = [0] * n

    def assign(v: int, c: int) -> None:
        colors[v] = c
        for u in G.adj[v]:
            if counts[u][c] == 0:
                saturation[u] += 1
            counts[u][c] += 1

    def unassign(v: int) -> None:
        c = colors[v]
        colors[v] = -1
        for u in G.adj[v]:
            counts[u][c] -= 1
            if counts[u][c] == 0:
                saturation[u] -= 1

    for c, v in enumerate(sorted(clique)):
        assign(v, c)
    uncolored = [v for v in range(n) if colors[v] == -1]

    def backtrack(remaining: int, top: int) -> bool:
        tick(budget)
        if remaining == 0:
            return True
        v = -1
        for u in uncolored:
            if colors[u] == -1 and (v == -1 or saturation[u] > saturation[v]):
                v = u
        if saturation[v] >= k:
            return False
        for c in range(min(k, top + 2)):
            if counts[v][c]:
                continue
            assign(v, c)
            if backtrack(remaining - 1, max(top, c)):
                return True
            unassign(v)
        return False

    if backtrack(len(uncolored), len(clique) - 1):
        return colors
    return None


def k_colorable(G: Graph, k: int, budget: Optional[Budget] = None) -> Optional[Coloring]:
    """
    Decide k-colourability.

    Returns:
        A proper colouring with colour indices below k (unused colours flagged),
        or None when G is not k-colourable.
    """
    if k < 0:
        raise ValueError(f"colour count must be non-negative, got {k}")
    if G.n == 0:
        return Coloring((), k, allow_unused=True)
    if k == 0:
        return None
    clique = max_clique(G, budget)
    if len(clique) > k:
        return None
    colors = _search(G, k, clique, budget)
    if colors is None:
        return None
    return Coloring(tuple(colors), k, allow_unused=True)


def chromatic_number(G: Graph, budget: Optional[Budget] = None) -> Tuple[int, Coloring]:
    """
    Exact chromatic number with a witness using exactly chi colours.

    The clique number is the lower bound and DSATUR first-fit the upper bound;
    the gap is closed by testing k from the lower bound upward.
    """
    if G.n == 0:
        return 0, Coloring((), 0)
    clique = max_clique(G, budget)
    upper = greedy_coloring(G)
    for k in range(len(clique), upper.k):
        colors = _search(G, k, clique, budget)
        if colors is not None:
            return k, Coloring(tuple(colors), k)
    return upper.k, upper
