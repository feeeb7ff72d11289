"""
Partitioned colourings of the form {x}, L_11..L_1r1, ..., L_a1..L_ara.

Colour 0 always holds the singleton x. Group i (1-based) owns a contiguous
block of r_i colours; U_i is the union of its classes and C_i its colours.
"""

from dataclasses import dataclass, field
from enum import Enum
from typing import Dict, List, Optional, Sequence, Tuple

from critcolor.core.errors import BadGroupIndex, InvalidColoring, SchemeMismatch, SizeMismatch
from critcolor.coloring.coloring import Coloring, color_classes, is_proper
from critcolor.graph.graph_core import Graph, VertexSet

SINGLETON_COLOR = 0


class SearchMode(str, Enum):
    EXACT = "exact"
    LOCAL_SEARCH = "local"


@dataclass(frozen=True)
class PartitionScheme:
    group_sizes: Tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "group_sizes", tuple(self.group_sizes))
        if not self.group_sizes or any(r < 1 for r in self.group_sizes):
            raise SchemeMismatch(f"group sizes must be positive, got {self.group_sizes}")

    @classmethod
    def for_max_degree(cls, delta: int) -> "PartitionScheme":
        """(floor((delta-1)/2), ceil((delta-1)/2)), the two-group walk scheme."""
        return cls(((delta - 1) // 2, delta // 2))

    @property
    def groups(self) -> int:
        return len(self.group_sizes)

    @property
    def total(self) -> int:
        return sum(self.group_sizes)

    @property
    def num_colors(self) -> int:
        return self.total + 1

    def size(self, i: int) -> int:
        self._check_group(i)
        return self.group_sizes[i - 1]

    def colors_of_group(self, i: int) -> range:
        self._check_group(i)
        start = 1 + sum(self.group_sizes[: i - 1])
        return range(start, start + self.group_sizes[i - 1])

    def group_of_color(self, c: int) -> int:
        """Group index owning colour c; 0 for the singleton colour."""
        if c == SINGLETON_COLOR:
            return 0
        bound = 0
        for i, r in enumerate(self.group_sizes, start=1):
            bound += r
            if c <= bound:
                return i
        raise InvalidColoring(f"colour {c} is outside the scheme {self.group_sizes}")

    def _check_group(self, i: int) -> None:
        if not 1 <= i <= len(self.group_sizes):
            raise BadGroupIndex(f"group index {i} outside 1..{len(self.group_sizes)}")

    def to_dict(self) -> Dict:
        return {"group_sizes": list(self.group_sizes)}


@dataclass(frozen=True)
class PartitionedColoring:
    scheme: PartitionScheme
    coloring: Coloring
    provenance: Optional[SearchMode] = None
    singleton: int = field(init=False)

    def __post_init__(self):
        if self.coloring.k != self.scheme.num_colors:
            raise InvalidColoring(
                f"coloring has {self.coloring.k} colours, scheme needs {self.scheme.num_colors}"
            )
        holders = [v for v, c in enumerate(self.coloring.assignment) if c == SINGLETON_COLOR]
        if len(holders) != 1:
            raise InvalidColoring(f"singleton class must hold exactly one vertex, holds {holders}")
        object.__setattr__(self, "singleton", holders[0])

    @classmethod
    def from_assignment(
        cls, scheme: PartitionScheme, assignment: Sequence[int], provenance: Optional[SearchMode] = None
    ) -> "PartitionedColoring":
        coloring = Coloring(tuple(assignment), scheme.num_colors, allow_unused=True)
        return cls(scheme, coloring, provenance)

    @classmethod
    def from_coloring(
        cls, coloring: Coloring, scheme: PartitionScheme, singleton: int
    ) -> "PartitionedColoring":
        """
        Lift a plain colouring whose class of `singleton` is {singleton}.

        The singleton's colour becomes 0 and the remaining colours keep their
        relative order, filling group 1 first, then group 2, and so on.
        """
        if coloring.k != scheme.num_colors:
            raise SchemeMismatch(f"coloring has {coloring.k} colours, scheme needs {scheme.num_colors}")
        own = coloring[singleton]
        if sum(1 for c in coloring.assignment if c == own) != 1:
            raise InvalidColoring(f"vertex {singleton} does not form its own colour class")
        order = [own] + [c for c in range(coloring.k) if c != own]
        relabel = {old: new for new, old in enumerate(order)}
        return cls.from_assignment(scheme, [relabel[c] for c in coloring.assignment])

    def color(self, v: int) -> int:
        return self.coloring[v]

    def group_of_vertex(self, v: int) -> int:
        return self.scheme.group_of_color(self.coloring[v])

    @property
    def group_of_color(self) -> Dict[int, int]:
        return {c: self.scheme.group_of_color(c) for c in range(self.scheme.num_colors)}

    @property
    def classes(self) -> List[VertexSet]:
        """Colour classes indexed by colour; classes[0] == {singleton}."""
        return color_classes(self.coloring)

    def group_colors(self, i: int) -> range:
        return self.scheme.colors_of_group(i)

    def group_union(self, i: int) -> VertexSet:
        colors = set(self.scheme.colors_of_group(i))
        return frozenset(v for v, c in enumerate(self.coloring.assignment) if c in colors)

    def with_assignment(
        self, assignment: Sequence[int], provenance: Optional[SearchMode] = None
    ) -> "PartitionedColoring":
        return PartitionedColoring.from_assignment(self.scheme, assignment, provenance)

    def validate(self, G: Graph) -> None:
        try:
            proper = is_proper(G, self.coloring)
        except SizeMismatch as e:
            raise InvalidColoring(str(e)) from e
        if not proper:
            raise InvalidColoring("partitioned coloring is not proper")

    def to_dict(self) -> Dict:
        return {
            "scheme": self.scheme.to_dict(),
            "singleton": self.singleton,
            "coloring": self.coloring.to_dict(),
            "provenance": self.provenance.value if self.provenance else None,
        }


def internal_edges(G: Graph, pi: PartitionedColoring) -> int:
    """Sum over groups of the number of edges inside U_i."""
    pi.validate(G)
    group = [pi.group_of_vertex(v) for v in range(G.n)]
    return sum(1 for u, v in G.edges() if group[u] and group[u] == group[v])
