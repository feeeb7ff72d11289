"""
Minimal partitioned colourings: the global minimiser of internal_edges over
every proper colouring of the form {x}, group 1, ..., group a.

Exact mode runs a branch and bound enumeration seeded with the LocalSearch
result as its first upper bound. LocalSearch alone is deterministic for a
given seed but is not certified minimal.
"""

import logging
import random
from typing import List, Optional

from critcolor.core.budget import Budget, tick
from critcolor.core.errors import ColoringError, NotColorableInForm, SchemeMismatch
from critcolor.coloring.solver import chromatic_number, k_colorable
from critcolor.graph.graph_core import Graph, _check_vertex, delete_vertex, shortest_path_within
from critcolor.mozhan.moves import kempe_path_recolor, z_component
from critcolor.mozhan.partition import (
    SINGLETON_COLOR,
    PartitionedColoring,
    PartitionScheme,
    SearchMode,
    internal_edges,
)

logger = logging.getLogger(__name__)


def find_minimal_partitioned_coloring(
    G: Graph,
    scheme: PartitionScheme,
    x: int,
    mode: SearchMode = SearchMode.EXACT,
    seed: int = 0,
    budget: Optional[Budget] = None,
    chi: Optional[int] = None,
) -> PartitionedColoring:
    """
    Args:
        G: the graph
        scheme: group sizes; their sum plus one must equal chi(G)
        x: the singleton vertex
        mode: EXACT for a certified minimum, LOCAL_SEARCH for a local one
        seed: move-order seed for the local search
        budget: wall-clock allowance for the exact enumeration
        chi: chi(G) when the caller already knows it

    Returns:
        PartitionedColoring with singleton x and provenance set to mode

    Raises:
        SchemeMismatch, NotColorableInForm, Timeout
    """
    mode = SearchMode(mode)
    _check_vertex(G, x)
    if chi is None:
        chi, _ = chromatic_number(G, budget)
    if scheme.num_colors != chi:
        raise SchemeMismatch(f"scheme {scheme.group_sizes} gives {scheme.num_colors} colours, chi = {chi}")

    H, mapping = delete_vertex(G, x)
    base = k_colorable(H, scheme.total, budget)
    if base is None:
        if mode is SearchMode.LOCAL_SEARCH:
            logger.warning(f"vertex {x} is not critical; no colouring has {{{x}}} as a class")
        raise NotColorableInForm(f"G - {x} is not {scheme.total}-colourable, so {x} is not critical")
    if mode is SearchMode.LOCAL_SEARCH:
        logger.warning(f"local search colouring for x={x} is not certified minimal")

    assignment = [SINGLETON_COLOR] * G.n
    for v, w in mapping.items():
        assignment[v] = base[w] + 1
    start = PartitionedColoring.from_assignment(scheme, assignment)

    local = _local_search(G, start, seed, budget)
    if mode is SearchMode.LOCAL_SEARCH:
        return local.with_assignment(local.coloring.assignment, SearchMode.LOCAL_SEARCH)

    best = _exact_search(G, local, budget)
    logger.debug(f"minimal colouring for x={x}: {internal_edges(G, best)} internal edges")
    return best.with_assignment(best.coloring.assignment, SearchMode.EXACT)


# ==================== LOCAL SEARCH ====================


def _group_loads(G: Graph, pi: PartitionedColoring, v: int) -> List[int]:
    loads = [0] * (pi.scheme.groups + 1)
    for u in G.adj[v]:
        loads[pi.group_of_vertex(u)] += 1
    return loads


def _improving_move(G: Graph, pi: PartitionedColoring, rng: random.Random) -> Optional[PartitionedColoring]:
    """First single-vertex recolouring that lowers internal_edges, in a seeded vertex order."""
    scheme = pi.scheme
    order = [v for v in range(G.n) if v != pi.singleton]
    rng.shuffle(order)
    for v in order:
        own = pi.color(v)
        own_group = scheme.group_of_color(own)
        taken = {pi.color(u) for u in G.adj[v]}
        loads = _group_loads(G, pi, v)
        for c in range(1, scheme.num_colors):
            if c == own or c in taken:
                continue
            if loads[scheme.group_of_color(c)] < loads[own_group]:
                assignment = list(pi.coloring.assignment)
                assignment[v] = c
                return pi.with_assignment(assignment)
    return None


def _kempe_unlock(
    G: Graph, pi: PartitionedColoring, rng: random.Random, budget: Optional[Budget]
) -> Optional[PartitionedColoring]:
    """A Kempe path shift inside some Z_i(x) followed by an improving move."""
    x = pi.singleton
    current = internal_edges(G, pi)
    for i in range(1, pi.scheme.groups + 1):
        inside = z_component(G, pi, x, i) - {x}
        for u in sorted(inside):
            for w in sorted(inside):
                if u == w:
                    continue
                tick(budget)
                path = shortest_path_within(G, inside, u, w)
                if path is None:
                    continue
                try:
                    shifted = kempe_path_recolor(G, pi, path, i)
                except ColoringError:
                    continue
                improved = _improving_move(G, shifted, rng)
                if improved is not None and internal_edges(G, improved) < current:
                    logger.debug(f"Kempe shift along {path} in group {i} unlocked a move")
                    return improved
    return None


def _local_search(
    G: Graph, pi: PartitionedColoring, seed: int, budget: Optional[Budget]
) -> PartitionedColoring:
    rng = random.Random(seed)
    current = pi
    while True:
        tick(budget)
        nxt = _improving_move(G, current, rng)
        if nxt is None:
            nxt = _kempe_unlock(G, current, rng, budget)
        if nxt is None:
            return current
        current = nxt


# ==================== EXACT SEARCH ====================


def _exact_search(G: Graph, upper: PartitionedColoring, budget: Optional[Budget]) -> PartitionedColoring:
    """
    Branch and bound over colourings of G - x with x fixed as the singleton.

    Colours inside one group are interchangeable, so a vertex may only open
    the next unused colour of a group. The bound adds, for every unassigned
    vertex, its cheapest group against the already assigned neighbours.
    """
    scheme = upper.scheme
    x = upper.singleton
    group_of = [scheme.group_of_color(c) for c in range(scheme.num_colors)]
    first_color = [0] + [scheme.colors_of_group(i).start for i in range(1, scheme.groups + 1)]

    order = sorted((v for v in range(G.n) if v != x), key=lambda v: (-len(G.adj[v]), v))
    colors = [-1] * G.n
    colors[x] = SINGLETON_COLOR
    opened = [0] * (scheme.groups + 1)

    best = [internal_edges(G, upper), list(upper.coloring.assignment)]

    def loads(v: int) -> List[int]:
        counts = [0] * (scheme.groups + 1)
        for u in G.adj[v]:
            if colors[u] > SINGLETON_COLOR:
                counts[group_of[colors[u]]] += 1
        return counts

    def bound(depth: int, cost: int) -> int:
        extra = 0
        for v in order[depth:]:
            extra += min(loads(v)[1:])
        return cost + extra

    def dfs(depth: int, cost: int) -> None:
        tick(budget)
        if depth == len(order):
            if cost < best[0]:
                best[0], best[1] = cost, list(colors)
            return
        if bound(depth, cost) >= best[0]:
            return
        v = order[depth]
        taken = {colors[u] for u in G.adj[v]}
        group_load = loads(v)
        for g in range(1, scheme.groups + 1):
            step = cost + group_load[g]
            if step >= best[0]:
                continue
            top = min(opened[g], scheme.group_sizes[g - 1] - 1)
            for c in range(first_color[g], first_color[g] + top + 1):
                if c in taken:
                    continue
                fresh = c == first_color[g] + opened[g]
                colors[v] = c
                if fresh:
                    opened[g] += 1
                dfs(depth + 1, step)
                if fresh:
                    opened[g] -= 1
                colors[v] = -1

    dfs(0, 0)
    return upper.with_assignment(best[1])
