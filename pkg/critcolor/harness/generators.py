import logging
import random
from typing import Optional

import networkx as nx

from critcolor.core.budget import Budget
from critcolor.core.errors import InvalidParameter
from critcolor.coloring.critical import critical_subgraph
from critcolor.graph.graph_core import Graph, from_edge_list, relabel

logger = logging.getLogger(__name__)

# edges of the 9-vertex chi = 5 graph showing 6 <= chi cannot be dropped from corollary-o
FIGURE1_EDGES = [
    (0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3), (0, 8), (1, 8), (2, 8),
    (4, 5), (4, 6), (4, 7), (5, 6), (5, 7), (6, 7), (4, 8), (6, 8),
    (3, 5), (3, 7),
]

RANDOM_CRITICAL_ATTEMPTS = 1000


def fixture_figure1() -> Graph:
    return from_edge_list(9, FIGURE1_EDGES)


def random_graph(n: int, edge_probability: float, seed: int) -> Graph:
    """G(n, p), deterministic for a given seed."""
    if n < 0:
        raise InvalidParameter(f"vertex count must be non-negative, got {n}")
    if not 0.0 <= edge_probability <= 1.0:
        raise InvalidParameter(f"edge probability must lie in [0, 1], got {edge_probability}")
    return Graph.from_networkx(nx.gnp_random_graph(n, edge_probability, seed=seed))


def random_critical(n: int, seed: int, budget: Optional[Budget] = None) -> Graph:
    """
    Vertex-critical subgraph of a dense random graph on n vertices.

    Edge probabilities and graph seeds are drawn from `seed`, and draws are
    repeated until the critical subgraph has at least 4 vertices.
    """
    if n < 4:
        raise InvalidParameter(f"random_critical needs n >= 4, got {n}")
    rng = random.Random(seed)
    for attempt in range(RANDOM_CRITICAL_ATTEMPTS):
        p = rng.uniform(0.4, 0.95)
        G = random_graph(n, p, rng.randrange(2**32))
        C = critical_subgraph(G, budget)
        if C.n >= 4:
            logger.debug(f"random_critical(n={n}, seed={seed}): {C} after {attempt + 1} draws")
            return C
    raise InvalidParameter(f"no critical subgraph with 4+ vertices after {RANDOM_CRITICAL_ATTEMPTS} draws")


def random_chi_delta_graph(k: int, seed: int, max_extra: int = 4) -> Graph:
    """
    A graph with chi = max degree = k: K_k with up to max_extra outside
    vertices, relabelled at random.

    Each outside vertex hangs off its own clique vertex and may join other
    outside vertices, with degree at most k - 2. K_k forces chi >= k and
    Brooks gives chi <= k, and deleting any clique vertex leaves a (k-1)-colourable
    graph, so every clique vertex is critical. Clique vertices with no outside
    neighbour are low.
    """
    if k < 4:
        raise InvalidParameter(f"random_chi_delta_graph needs k >= 4, got {k}")
    if max_extra < 1:
        raise InvalidParameter(f"max_extra must be positive, got {max_extra}")
    rng = random.Random(seed)
    m = rng.randint(1, min(max_extra, k - 2))
    n = k + m
    edges = [(u, v) for u in range(k) for v in range(u + 1, k)]
    degree = [k - 1] * k + [0] * m
    anchors = rng.sample(range(k), m)
    for o, c in zip(range(k, n), anchors):
        edges.append((c, o))
        degree[c] += 1
        degree[o] += 1
    for u in range(k, n):
        for v in range(u + 1, n):
            if degree[u] < k - 2 and degree[v] < k - 2 and rng.random() < 0.5:
                edges.append((u, v))
                degree[u] += 1
                degree[v] += 1
    mapping = list(range(n))
    rng.shuffle(mapping)
    return relabel(from_edge_list(n, edges), mapping)
