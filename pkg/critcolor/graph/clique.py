"""
Exact maximum clique by branch and bound.

Candidates are explored in degeneracy order and bounded with a greedy coloring
of the remaining candidate set: a set that splits into c independent classes
cannot extend the current clique by more than c vertices.
"""

from typing import List, NamedTuple, Optional, Sequence, Tuple

from critcolor.core.budget import Budget, tick
from critcolor.graph.graph_core import Graph, VertexSet


class CliqueSearch(NamedTuple):
    found: bool
    witness: VertexSet


def degeneracy_order(G: Graph) -> List[int]:
    """Smallest-last order: repeatedly remove a minimum-degree vertex (lowest index on ties)."""
    remaining = set(range(G.n))
    deg = [len(G.adj[v]) for v in range(G.n)]
    removed = []
    while remaining:
        v = min(remaining, key=lambda u: (deg[u], u))
        remaining.remove(v)
        removed.append(v)
        for u in G.adj[v]:
            if u in remaining:
                deg[u] -= 1
    return removed


def _color_sort(G: Graph, candidates: Sequence[int]) -> List[Tuple[int, int]]:
    """Greedy-colour candidates; return (vertex, colour bound) sorted by bound."""
    classes: List[List[int]] = []
    for v in candidates:
        for cls in classes:
            if not any(u in G.adj[v] for u in cls):
                cls.append(v)
                break
        else:
            classes.append([v])
    return [(v, k) for k, cls in enumerate(classes, start=1) for v in cls]


def _max_clique(G: Graph, target: Optional[int], budget: Optional[Budget]) -> List[int]:
    best: List[int] = []

    def expand(clique: List[int], candidates: List[int]) -> bool:
        nonlocal best
        tick(budget)
        colored = _color_sort(G, candidates)
        for idx in range(len(colored) - 1, -1, -1):
            v, bound = colored[idx]
            if len(clique) + bound <= len(best):
                return False
            grown = clique + [v]
            nxt = [u for u, _ in colored[:idx] if u in G.adj[v]]
            if nxt:
                if expand(grown, nxt):
                    return True
            elif len(grown) > len(best):
                best = grown
                if target is not None and len(best) >= target:
                    return True
        return False

    # degeneracy order reversed puts the densest core first
    expand([], degeneracy_order(G)[::-1])
    return best


def max_clique(G: Graph, budget: Optional[Budget] = None) -> VertexSet:
    return frozenset(_max_clique(G, None, budget))


def clique_number(G: Graph, budget: Optional[Budget] = None) -> int:
    """Exact clique number; 0 for the empty graph."""
    return len(_max_clique(G, None, budget))


def contains_clique(G: Graph, k: int, budget: Optional[Budget] = None) -> CliqueSearch:
    """Decide whether G contains K_k; the witness induces a complete subgraph of size k."""
    if k <= 0:
        return CliqueSearch(True, frozenset())
    if k > G.n:
        return CliqueSearch(False, frozenset())
    clique = _max_clique(G, k, budget)
    if len(clique) >= k:
        return CliqueSearch(True, frozenset(sorted(clique)[:k]))
    return CliqueSearch(False, frozenset())


def is_clique(G: Graph, S) -> bool:
    S = list(S)
    return all(S[j] in G.adj[S[i]] for i in range(len(S)) for j in range(i + 1, len(S)))
