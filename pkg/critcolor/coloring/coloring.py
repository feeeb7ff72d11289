from dataclasses import dataclass
from typing import Dict, List, Sequence, Tuple

from critcolor.core.errors import InvalidColoring, SizeMismatch
from critcolor.graph.graph_core import Graph, VertexSet


@dataclass(frozen=True)
class Coloring:
    """
    Total map vertex -> colour index 0..k-1.

    Every colour below k must be used unless allow_unused is set.
    """

    assignment: Tuple[int, ...]
    k: int
    allow_unused: bool = False

    def __post_init__(self):
        if self.k < 0:
            raise InvalidColoring(f"colour count must be non-negative, got {self.k}")
        for v, c in enumerate(self.assignment):
            if not 0 <= c < self.k:
                raise InvalidColoring(f"vertex {v} has colour {c} outside 0..{self.k - 1}")
        if not self.allow_unused and len(set(self.assignment)) != self.k:
            raise InvalidColoring(f"only {len(set(self.assignment))} of {self.k} colours are used")

    @classmethod
    def of(cls, assignment: Sequence[int], k: int = None, allow_unused: bool = False) -> "Coloring":
        assignment = tuple(assignment)
        if k is None:
            k = max(assignment) + 1 if assignment else 0
        return cls(assignment, k, allow_unused)

    def __getitem__(self, v: int) -> int:
        return self.assignment[v]

    def __len__(self) -> int:
        return len(self.assignment)

    @property
    def colors_used(self) -> int:
        return len(set(self.assignment))

    def to_dict(self) -> Dict:
        return {"k": self.k, "assignment": list(self.assignment)}


def is_proper(G: Graph, c: Coloring) -> bool:
    if len(c) != G.n:
        raise SizeMismatch(f"coloring covers {len(c)} vertices, graph has {G.n}")
    return all(c[u] != c[v] for u, v in G.edges())


def color_classes(c: Coloring) -> List[VertexSet]:
    classes: List[set] = [set() for _ in range(c.k)]
    for v, color in enumerate(c.assignment):
        classes[color].add(v)
    return [frozenset(cls) for cls in classes]


def greedy_coloring(G: Graph) -> Coloring:
    """DSATUR first-fit: highest saturation first, then highest degree, then lowest index."""
    colors = [-1] * G.n
    neighbor_colors = [set() for _ in range(G.n)]
    uncolored = set(range(G.n))

    while uncolored:
        v = min(uncolored, key=lambda u: (-len(neighbor_colors[u]), -len(G.adj[u]), u))
        c = 0
        while c in neighbor_colors[v]:
            c += 1
        colors[v] = c
        uncolored.remove(v)
        for u in G.adj[v]:
            if u in uncolored:
                neighbor_colors[u].add(c)

    return Coloring.of(colors)
