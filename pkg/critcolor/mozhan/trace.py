"""
Walk trace records and their JSON form.

Field names here are the stable document schema written by `critcolor walk`.
Traces carry no timestamps so identical runs serialise to identical bytes.
"""

import json
from dataclasses import asdict, dataclass, field
from typing import Dict, List, Optional, Tuple


@dataclass
class WalkOutcome:
    kind: str


@dataclass
class StopConditionMet(WalkOutcome):
    k: int
    z: int


@dataclass
class StepCapExceeded(WalkOutcome):
    steps: int


@dataclass
class NoEligibleVertex(WalkOutcome):
    step: int


@dataclass
class FormBroken(WalkOutcome):
    step: int
    reason: str


def stop_condition_met(k: int, z: int) -> StopConditionMet:
    return StopConditionMet("stop_condition_met", k, z)


def step_cap_exceeded(steps: int) -> StepCapExceeded:
    return StepCapExceeded("step_cap_exceeded", steps)


def no_eligible_vertex(step: int) -> NoEligibleVertex:
    return NoEligibleVertex("no_eligible_vertex", step)


def form_broken(step: int, reason: str) -> FormBroken:
    return FormBroken("form_broken", step, reason)


@dataclass
class WalkStep:
    index: int
    parity: int
    singleton: int
    chosen: int
    q_value: int
    distance: int
    snapshot: int
    q_update: Tuple[int, int, int]  # (vertex, before, after)

    def to_dict(self) -> Dict:
        vertex, before, after = self.q_update
        return {
            "index": self.index,
            "parity": self.parity,
            "singleton": self.singleton,
            "chosen": self.chosen,
            "q_value": self.q_value,
            "distance": self.distance,
            "snapshot": self.snapshot,
            "q_update": {"vertex": vertex, "before": before, "after": after},
        }


@dataclass
class WalkTrace:
    n: int
    graph6: str
    start: int
    group_sizes: List[int]
    mode: str
    seed: int
    max_steps: int
    initial_objective: int
    outside_theorem_range: bool = False
    promoted_from: Optional[int] = None
    steps: List[WalkStep] = field(default_factory=list)
    snapshots: List[Tuple[int, ...]] = field(default_factory=list)
    q_final: Dict[int, int] = field(default_factory=dict)
    q_excursion: int = 0
    outcome: Optional[WalkOutcome] = None

    def to_dict(self) -> Dict:
        return {
            "n": self.n,
            "graph6": self.graph6,
            "start": self.start,
            "scheme": {"group_sizes": list(self.group_sizes)},
            "mode": self.mode,
            "seed": self.seed,
            "max_steps": self.max_steps,
            "initial_objective": self.initial_objective,
            "outside_theorem_range": self.outside_theorem_range,
            "promoted_from": self.promoted_from,
            "steps": [s.to_dict() for s in self.steps],
            "snapshots": [list(s) for s in self.snapshots],
            "q_final": {str(v): q for v, q in sorted(self.q_final.items())},
            "q_excursion": self.q_excursion,
            "outcome": asdict(self.outcome) if self.outcome else None,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2, sort_keys=True)
