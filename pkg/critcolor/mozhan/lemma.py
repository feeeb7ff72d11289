import logging
from dataclasses import dataclass, field
from typing import Dict, List, Optional

from critcolor.core.errors import NotMinimal, PreconditionViolated
from critcolor.graph.clique import is_clique
from critcolor.graph.graph_core import Graph, VertexSet, component_of
from critcolor.mozhan.moves import z_component, z_degree
from critcolor.mozhan.partition import PartitionedColoring, SearchMode

logger = logging.getLogger(__name__)

COMPLETE = "complete"
ODD_CYCLE = "odd_cycle"
OTHER = "other"


@dataclass
class GroupCheck:
    group: int
    size: int
    z_vertices: List[int]
    z_degree: int
    applies: bool
    shape: str
    passed: Optional[bool]  # None when d_Z(x) != r_i

    def to_dict(self) -> Dict:
        return {
            "group": self.group,
            "size": self.size,
            "z_vertices": list(self.z_vertices),
            "z_degree": self.z_degree,
            "applies": self.applies,
            "shape": self.shape,
            "passed": self.passed,
        }


@dataclass
class Lemma1Report:
    singleton: int
    group_sizes: List[int]
    certified: bool
    groups: List[GroupCheck] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(g.passed is not False for g in self.groups)

    def to_dict(self) -> Dict:
        return {
            "singleton": self.singleton,
            "group_sizes": list(self.group_sizes),
            "certified": self.certified,
            "passed": self.passed,
            "groups": [g.to_dict() for g in self.groups],
        }


def _is_odd_cycle(G: Graph, Z: VertexSet) -> bool:
    if len(Z) < 3 or len(Z) % 2 == 0:
        return False
    if any(len(G.adj[v] & Z) != 2 for v in Z):
        return False
    return len(component_of(G, Z, min(Z))) == len(Z)


def _shape(G: Graph, Z: VertexSet) -> str:
    if _is_odd_cycle(G, Z):
        return ODD_CYCLE
    if is_clique(G, Z):
        return COMPLETE
    return OTHER


def verify_lemma1(
    G: Graph, pi: PartitionedColoring, x: Optional[int] = None, advisory: bool = False
) -> Lemma1Report:
    """
    Check every group i with d_{Z_i(x)}(x) = r_i: Z_i(x) must be complete when
    r_i >= 3, an odd cycle when r_i = 2 and an edge when r_i = 1.

    Raises:
        NotMinimal: pi is not an exact minimum and advisory is False.
    """
    if x is not None and x != pi.singleton:
        raise PreconditionViolated(f"{x} is not the singleton of the colouring", x)
    certified = pi.provenance is SearchMode.EXACT
    if not certified and not advisory:
        raise NotMinimal("colouring is not certified minimal; pass advisory=True to check anyway")

    x = pi.singleton
    report = Lemma1Report(x, list(pi.scheme.group_sizes), certified)
    for i in range(1, pi.scheme.groups + 1):
        r = pi.scheme.size(i)
        Z = z_component(G, pi, x, i)
        d = z_degree(G, Z, x)
        shape = _shape(G, Z)
        applies = d == r
        passed = None
        if applies:
            passed = _is_odd_cycle(G, Z) if r == 2 else is_clique(G, Z)
            if not passed:
                logger.warning(f"group {i} of x={x}: Z has shape {shape} with r={r}")
        report.groups.append(GroupCheck(i, r, sorted(Z), d, applies, shape, passed))
    return report
