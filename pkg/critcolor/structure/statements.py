"""
Hypothesis and conclusion checks for the critical-graph statements.

Each check returns a StatementOutcome; a violation is a graph satisfying the
hypothesis but not the conclusion. Clauses are evaluated cheapest first so the
exact solvers only run when the degree conditions already hold.
"""

from dataclasses import dataclass, field
from enum import Enum
from typing import Dict, List, Optional, Tuple

from critcolor.core.budget import Budget
from critcolor.core.errors import NoEdges
from critcolor.coloring.critical import CRITICALITY_DEFINITION
from critcolor.graph.clique import contains_clique
from critcolor.graph.graph_core import Graph
from critcolor.structure.predicates import DegreeClass, classify
from critcolor.structure.profile import GraphProfile


class Statement(str, Enum):
    THEOREM_M = "theorem-m"
    COROLLARY_N = "corollary-n"
    COROLLARY_O = "corollary-o"
    KK_THEOREM = "kk"


@dataclass(frozen=True)
class StatementOutcome:
    statement: Statement
    hypothesis: bool
    conclusion: bool
    criticality: str = CRITICALITY_DEFINITION
    notes: Tuple[str, ...] = ()

    @property
    def violation(self) -> bool:
        return self.hypothesis and not self.conclusion

    def to_dict(self) -> Dict:
        return {
            "statement": self.statement.value,
            "hypothesis": self.hypothesis,
            "conclusion": self.conclusion,
            "violation": self.violation,
            "criticality": self.criticality,
            "notes": list(self.notes),
        }


def _profile(G: Graph, profile: Optional[GraphProfile], budget: Optional[Budget]) -> GraphProfile:
    return profile if profile is not None else GraphProfile(G, budget)


def _is_k_chi(p: GraphProfile) -> bool:
    """G is K_chi(G): complete on exactly chi vertices."""
    return p.is_complete and p.chi == p.n


def _critical_with_chi_at_least_delta(p: GraphProfile, min_delta: int) -> bool:
    return p.n > 0 and p.delta >= min_delta and p.chi >= p.delta


def theorem_m_check(
    G: Graph, profile: Optional[GraphProfile] = None, budget: Optional[Budget] = None
) -> StatementOutcome:
    p = _profile(G, profile, budget)
    hypothesis = (
        _critical_with_chi_at_least_delta(p, 6)
        and p.omega_h <= p.delta // 2 - 2
        and p.is_critical
    )
    return StatementOutcome(Statement.THEOREM_M, hypothesis, _is_k_chi(p))


def kk_theorem_check(
    G: Graph, profile: Optional[GraphProfile] = None, budget: Optional[Budget] = None
) -> StatementOutcome:
    p = _profile(G, profile, budget)
    hypothesis = _critical_with_chi_at_least_delta(p, 7) and p.omega_h <= 1 and p.is_critical
    return StatementOutcome(Statement.KK_THEOREM, hypothesis, _is_k_chi(p))


def corollary_n_check(
    G: Graph, profile: Optional[GraphProfile] = None, budget: Optional[Budget] = None
) -> StatementOutcome:
    p = _profile(G, profile, budget)
    hypothesis = _critical_with_chi_at_least_delta(p, 6) and p.omega_h <= 1 and p.is_critical
    return StatementOutcome(Statement.COROLLARY_N, hypothesis, _is_k_chi(p))


def corollary_o_check(
    G: Graph, profile: Optional[GraphProfile] = None, budget: Optional[Budget] = None
) -> StatementOutcome:
    p = _profile(G, profile, budget)
    if p.theta is None:
        raise NoEdges("corollary-o needs at least one edge")
    on_boundary = p.chi == p.theta // 2 + 1
    hypothesis = on_boundary and p.chi >= 6
    conclusion = contains_clique(G, p.chi, p.budget).found
    notes: List[str] = []
    if on_boundary and not hypothesis and not conclusion:
        notes.append(
            f"sharpness: chi = floor(theta/2) + 1 = {p.chi} with no K_{p.chi}; "
            f"the bound 6 <= chi cannot be lowered to {p.chi}"
        )
    return StatementOutcome(Statement.COROLLARY_O, hypothesis, conclusion, notes=tuple(notes))


CHECKS = {
    Statement.THEOREM_M: theorem_m_check,
    Statement.COROLLARY_N: corollary_n_check,
    Statement.COROLLARY_O: corollary_o_check,
    Statement.KK_THEOREM: kk_theorem_check,
}


def check_statement(
    G: Graph, statement: Statement, profile: Optional[GraphProfile] = None, budget: Optional[Budget] = None
) -> StatementOutcome:
    return CHECKS[Statement(statement)](G, profile, budget)


# ==================== STRUCTURE REPORT ====================


@dataclass
class StructureReport:
    n: int
    edge_count: int
    chi: int
    delta: int
    min_degree: int
    omega: int
    omega_h: int
    theta: Optional[int]
    high_set: Tuple[int, ...]
    is_critical: bool
    degree_classes: Dict[str, int]
    outcomes: Dict[str, Dict] = field(default_factory=dict)
    criticality: str = CRITICALITY_DEFINITION

    def to_dict(self) -> Dict:
        return {
            "n": self.n,
            "edge_count": self.edge_count,
            "chi": self.chi,
            "delta": self.delta,
            "min_degree": self.min_degree,
            "omega": self.omega,
            "omega_h": self.omega_h,
            "theta": self.theta,
            "high_set": list(self.high_set),
            "is_critical": self.is_critical,
            "degree_classes": dict(self.degree_classes),
            "outcomes": dict(self.outcomes),
            "criticality": self.criticality,
        }


def structure_report(
    G: Graph, budget: Optional[Budget] = None, profile: Optional[GraphProfile] = None
) -> StructureReport:
    """Every invariant plus the outcome of each statement for one graph."""
    p = _profile(G, profile, budget)
    classes = classify(G, p)
    counts = {cls.value: sum(1 for c in classes.values() if c is cls) for cls in DegreeClass}

    outcomes = {}
    for statement, check in CHECKS.items():
        try:
            outcomes[statement.value] = check(G, p).to_dict()
        except NoEdges as e:
            outcomes[statement.value] = {"statement": statement.value, "error": str(e)}

    return StructureReport(
        n=G.n,
        edge_count=G.edge_count,
        chi=p.chi,
        delta=p.delta,
        min_degree=p.min_degree,
        omega=p.omega,
        omega_h=p.omega_h,
        theta=p.theta,
        high_set=tuple(sorted(p.high_set)),
        is_critical=p.is_critical,
        degree_classes=counts,
        outcomes=outcomes,
    )
