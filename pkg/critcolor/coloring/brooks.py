"""
Constructive Brooks colouring.

Every connected graph that is neither complete nor an odd cycle has a proper
colouring with max_degree colours. The construction follows the standard proof:
greedy colouring along an order in which every vertex but the last has a later
neighbour, arranged so the last vertex is guaranteed a free colour.
"""

import logging
from collections import deque
from itertools import combinations
from typing import Dict, Iterable, List, Optional

import networkx as nx

from critcolor.core.errors import Disconnected, ImproperResult, IsComplete, IsOddCycle
from critcolor.coloring.coloring import Coloring, is_proper
from critcolor.graph.graph_core import Graph, component_of, is_connected, max_degree

logger = logging.getLogger(__name__)


def _order_toward(G: Graph, allowed: Iterable[int], root: int) -> List[int]:
    """Vertices of allowed reachable from root, farthest from root first, root last."""
    allowed = set(allowed)
    dist = {root: 0}
    queue = deque([root])
    while queue:
        u = queue.popleft()
        for w in sorted(G.adj[u]):
            if w in allowed and w not in dist:
                dist[w] = dist[u] + 1
                queue.append(w)
    return sorted(dist, key=lambda v: (-dist[v], v))


def _greedy(G: Graph, order: List[int], colors: Dict[int, int], palette: int) -> None:
    for v in order:
        taken = {colors[u] for u in G.adj[v] if u in colors}
        free = [c for c in range(palette) if c not in taken]
        if not free:
            raise ImproperResult(f"no free colour for vertex {v} among {palette}")
        colors[v] = free[0]


def _two_color(G: Graph) -> Dict[int, int]:
    colors = {0: 0}
    for v in _order_toward(G, range(G.n), 0)[::-1]:
        for u in G.adj[v]:
            colors.setdefault(u, 1 - colors[v])
    return colors


def _find_lovasz_triple(G: Graph) -> Optional[tuple]:
    """x with non-adjacent neighbours u, w such that G - {u, w} stays connected."""
    for x in range(G.n):
        for u, w in combinations(sorted(G.adj[x]), 2):
            if w in G.adj[u]:
                continue
            rest = [v for v in range(G.n) if v not in (u, w)]
            if len(component_of(G, rest, x)) == len(rest):
                return x, u, w
    return None


def _use_every_color(G: Graph, colors: Dict[int, int], palette: int) -> None:
    """Move vertices into unused colours until all palette colours appear."""
    for c in range(palette):
        if c in colors.values():
            continue
        sizes: Dict[int, int] = {}
        for v in range(G.n):
            sizes[colors[v]] = sizes.get(colors[v], 0) + 1
        # c is unused, so any vertex of a class with a spare member can take it
        v = min(v for v in range(G.n) if sizes[colors[v]] > 1)
        colors[v] = c


def brooks_coloring(G: Graph) -> Coloring:
    """
    Proper colouring of G with exactly max_degree(G) colours.

    Raises:
        Disconnected, IsComplete, IsOddCycle: the cases Brooks' theorem excludes.
    """
    if G.n < 2 or not is_connected(G):
        raise Disconnected("Brooks colouring needs a connected graph on at least 2 vertices")
    if G.is_complete():
        raise IsComplete(f"K_{G.n} needs {G.n} colours")
    delta = max_degree(G)
    if delta == 2 and G.edge_count == G.n and G.n % 2 == 1:
        raise IsOddCycle(f"C_{G.n} needs 3 colours")

    if delta <= 2:
        colors = _two_color(G)
    else:
        colors = _brooks_high_degree(G, delta)

    _use_every_color(G, colors, delta)
    result = Coloring(tuple(colors[v] for v in range(G.n)), delta)
    if not is_proper(G, result):
        raise ImproperResult("Brooks construction produced an improper colouring")
    return result


def _brooks_high_degree(G: Graph, delta: int) -> Dict[int, int]:
    colors: Dict[int, int] = {}

    low = [v for v in range(G.n) if len(G.adj[v]) < delta]
    if low:
        # a vertex of degree below delta is coloured last
        _greedy(G, _order_toward(G, range(G.n), low[0]), colors, delta)
        return colors

    cut_vertices = sorted(nx.articulation_points(G.to_networkx()))
    if cut_vertices:
        # each piece of G - c plus c has c below full degree; align c's colour afterwards
        c = cut_vertices[0]
        rest = [v for v in range(G.n) if v != c]
        seen = set()
        for start in rest:
            if start in seen:
                continue
            piece = component_of(G, rest, start)
            seen |= piece
            local: Dict[int, int] = {}
            _greedy(G, _order_toward(G, piece | {c}, c), local, delta)
            shift = local[c]
            for v in piece:
                colors[v] = (local[v] - shift) % delta
        colors[c] = 0
        return colors

    triple = _find_lovasz_triple(G)
    if triple is None:
        raise ImproperResult("no Lovasz triple in a 2-connected regular non-complete graph")
    x, u, w = triple
    logger.debug(f"Brooks triple x={x}, u={u}, w={w}")
    colors[u] = colors[w] = 0
    _greedy(G, _order_toward(G, [v for v in range(G.n) if v not in (u, w)], x), colors, delta)
    return colors
