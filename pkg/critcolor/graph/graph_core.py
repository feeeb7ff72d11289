"""
Immutable simple-graph representation and connectivity utilities.

Vertices are the dense integers 0..n-1. Every analysis in critcolor is a pure
function of a Graph value, so graphs are safe to share between workers.
"""

from collections import deque
from dataclasses import dataclass, field
from typing import Dict, FrozenSet, Iterable, Iterator, List, Optional, Sequence, Tuple

import networkx as nx

from critcolor.core.errors import CycleTooSmall, EmptyGraph, OutOfRange, SelfLoop

VertexSet = FrozenSet[int]
Edge = Tuple[int, int]


@dataclass(frozen=True)
class Graph:
    n: int
    adj: Tuple[FrozenSet[int], ...]
    edge_count: int = field(init=False, compare=False)

    def __post_init__(self):
        if self.n < 0 or len(self.adj) != self.n:
            raise ValueError(f"adjacency has {len(self.adj)} rows for n={self.n}")
        degree_sum = 0
        for v, nbrs in enumerate(self.adj):
            if v in nbrs:
                raise SelfLoop(v)
            for u in nbrs:
                if not 0 <= u < self.n:
                    raise OutOfRange(u, self.n)
                if v not in self.adj[u]:
                    raise ValueError(f"adjacency is not symmetric at ({v}, {u})")
            degree_sum += len(nbrs)
        object.__setattr__(self, "edge_count", degree_sum // 2)

    def vertices(self) -> range:
        return range(self.n)

    def neighbors(self, v: int) -> FrozenSet[int]:
        _check_vertex(self, v)
        return self.adj[v]

    def has_edge(self, u: int, v: int) -> bool:
        return v in self.adj[u]

    def edges(self) -> Iterator[Edge]:
        """Unordered edges as (u, v) with u < v, in lexicographic order."""
        for u in range(self.n):
            for v in sorted(self.adj[u]):
                if u < v:
                    yield (u, v)

    def is_complete(self) -> bool:
        return self.edge_count == self.n * (self.n - 1) // 2

    def to_networkx(self) -> nx.Graph:
        G = nx.Graph()
        G.add_nodes_from(range(self.n))
        G.add_edges_from(self.edges())
        return G

    @classmethod
    def from_networkx(cls, G: nx.Graph) -> "Graph":
        """Relabel nodes to 0..n-1 in the graph's node order."""
        index = {node: i for i, node in enumerate(G.nodes())}
        edges = [(index[u], index[v]) for u, v in G.edges() if u != v]
        return from_edge_list(len(index), edges)

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, edges={self.edge_count})"


def _check_vertex(G: Graph, v: int) -> None:
    if not isinstance(v, int) or not 0 <= v < G.n:
        raise OutOfRange(v, G.n)


def _check_subset(G: Graph, S: Iterable[int]) -> VertexSet:
    S = frozenset(S)
    for v in S:
        _check_vertex(G, v)
    return S


# ==================== CONSTRUCTION ====================


def from_edge_list(n: int, edges: Iterable[Sequence[int]]) -> Graph:
    """Build a graph on n vertices; duplicate edges collapse silently."""
    if n < 0:
        raise ValueError(f"vertex count must be non-negative, got {n}")
    rows: List[set] = [set() for _ in range(n)]
    for u, v in edges:
        if not 0 <= u < n:
            raise OutOfRange(u, n)
        if not 0 <= v < n:
            raise OutOfRange(v, n)
        if u == v:
            raise SelfLoop(u)
        rows[u].add(v)
        rows[v].add(u)
    return Graph(n, tuple(frozenset(r) for r in rows))


def complete_graph(n: int) -> Graph:
    if n < 0:
        raise ValueError(f"vertex count must be non-negative, got {n}")
    everyone = frozenset(range(n))
    return Graph(n, tuple(everyone - {v} for v in range(n)))


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise CycleTooSmall(f"a cycle needs at least 3 vertices, got {n}")
    return from_edge_list(n, [(v, (v + 1) % n) for v in range(n)])


def complement(G: Graph) -> Graph:
    everyone = frozenset(range(G.n))
    return Graph(G.n, tuple(everyone - G.adj[v] - {v} for v in range(G.n)))


def relabel(G: Graph, mapping: Sequence[int]) -> Graph:
    """Vertex v of G becomes mapping[v]; mapping must be a permutation."""
    if sorted(mapping) != list(range(G.n)):
        raise ValueError("relabel mapping must be a permutation of 0..n-1")
    return from_edge_list(G.n, [(mapping[u], mapping[v]) for u, v in G.edges()])


# ==================== DEGREES ====================


def degree(G: Graph, v: int) -> int:
    _check_vertex(G, v)
    return len(G.adj[v])


def max_degree(G: Graph) -> int:
    if G.n == 0:
        raise EmptyGraph("maximum degree of the empty graph is undefined")
    return max(len(nbrs) for nbrs in G.adj)


def min_degree(G: Graph) -> int:
    if G.n == 0:
        raise EmptyGraph("minimum degree of the empty graph is undefined")
    return min(len(nbrs) for nbrs in G.adj)


# ==================== SUBGRAPHS ====================


def induced_subgraph(G: Graph, S: Iterable[int]) -> Tuple[Graph, Dict[int, int]]:
    """
    Subgraph induced on S, relabelled in increasing vertex order.

    Returns:
        (subgraph, old -> new vertex map)
    """
    S = _check_subset(G, S)
    order = sorted(S)
    mapping = {old: new for new, old in enumerate(order)}
    rows = tuple(frozenset(mapping[u] for u in G.adj[old] if u in S) for old in order)
    return Graph(len(order), rows), mapping


def delete_vertex(G: Graph, v: int) -> Tuple[Graph, Dict[int, int]]:
    _check_vertex(G, v)
    return induced_subgraph(G, (u for u in range(G.n) if u != v))


# ==================== CONNECTIVITY ====================


def distances_within(G: Graph, S: Iterable[int], source: int) -> Dict[int, int]:
    """Breadth-first hop counts from source inside G[S] (reachable vertices only)."""
    S = _check_subset(G, S)
    _check_vertex(G, source)
    if source not in S:
        raise OutOfRange(source, G.n)
    dist = {source: 0}
    queue = deque([source])
    while queue:
        u = queue.popleft()
        for w in sorted(G.adj[u]):
            if w in S and w not in dist:
                dist[w] = dist[u] + 1
                queue.append(w)
    return dist


def component_of(G: Graph, S: Iterable[int], v: int) -> VertexSet:
    return frozenset(distances_within(G, S, v))


def distance_within(G: Graph, S: Iterable[int], u: int, v: int) -> Optional[int]:
    """Shortest-path length from u to v inside G[S]; None when unreachable."""
    S = _check_subset(G, S)
    _check_vertex(G, v)
    if v not in S:
        raise OutOfRange(v, G.n)
    return distances_within(G, S, u).get(v)


def shortest_path_within(G: Graph, S: Iterable[int], u: int, v: int) -> Optional[List[int]]:
    """One shortest u-v path inside G[S], lowest-index parents first."""
    S = _check_subset(G, S)
    if u not in S or v not in S:
        raise OutOfRange(u if u not in S else v, G.n)
    parent = {u: None}
    queue = deque([u])
    while queue:
        a = queue.popleft()
        if a == v:
            break
        for w in sorted(G.adj[a]):
            if w in S and w not in parent:
                parent[w] = a
                queue.append(w)
    if v not in parent:
        return None
    path = [v]
    while parent[path[-1]] is not None:
        path.append(parent[path[-1]])
    return path[::-1]


def is_connected(G: Graph) -> bool:
    if G.n == 0:
        return True
    return len(component_of(G, range(G.n), 0)) == G.n
