"""
Campaign reports.

Reports hold only deterministic data: no timestamps and no timings, so two runs
over the same corpus with the same flags serialise to identical bytes.
"""

import json
from dataclasses import dataclass, field
from enum import Enum
from pathlib import Path
from typing import Any, Dict, List, Optional, Union

from critcolor import TOOL_NAME, __version__
from critcolor.coloring.critical import CRITICALITY_DEFINITION
from critcolor.core.errors import CorpusIOError


class RecordStatus(str, Enum):
    PASSED = "passed"
    SATISFIED = "satisfied"  # hypothesis and conclusion both hold
    VIOLATION = "violation"
    NOT_APPLICABLE = "not_applicable"
    SKIPPED = "skipped"  # budget exhausted
    ERROR = "error"


@dataclass
class GraphRecord:
    label: str
    status: RecordStatus
    detail: Optional[Dict[str, Any]] = None
    error: Optional[str] = None

    def to_dict(self) -> Dict:
        return {
            "label": self.label,
            "status": self.status.value,
            "detail": self.detail,
            "error": self.error,
        }


@dataclass
class Report:
    kind: str
    corpus: str
    digest: str
    parameters: Dict[str, Any] = field(default_factory=dict)
    scanned: int = 0
    hypothesis_satisfied: Dict[str, int] = field(default_factory=dict)
    violations: Dict[str, int] = field(default_factory=dict)
    counts: Dict[str, int] = field(default_factory=dict)
    records: List[GraphRecord] = field(default_factory=list)
    notes: List[str] = field(default_factory=list)
    malformed: List[str] = field(default_factory=list)

    def count(self, key: str, by: int = 1) -> None:
        self.counts[key] = self.counts.get(key, 0) + by

    @property
    def violation_records(self) -> List[GraphRecord]:
        return [r for r in self.records if r.status is RecordStatus.VIOLATION]

    @property
    def error_records(self) -> List[GraphRecord]:
        return [r for r in self.records if r.status is RecordStatus.ERROR]

    @property
    def total_violations(self) -> int:
        return sum(self.violations.values())

    @property
    def clean(self) -> bool:
        return self.total_violations == 0 and not self.error_records

    def to_dict(self) -> Dict:
        return {
            "tool": TOOL_NAME,
            "version": __version__,
            "criticality": CRITICALITY_DEFINITION,
            "kind": self.kind,
            "corpus": self.corpus,
            "digest": self.digest,
            "parameters": dict(self.parameters),
            "scanned": self.scanned,
            "hypothesis_satisfied": dict(self.hypothesis_satisfied),
            "violations": dict(self.violations),
            "counts": dict(self.counts),
            "records": [r.to_dict() for r in self.records],
            "notes": list(self.notes),
            "malformed": list(self.malformed),
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2, sort_keys=True)

    def write(self, path: Union[str, Path]) -> None:
        try:
            Path(path).write_text(self.to_json() + "\n", encoding="utf-8")
        except OSError as e:
            raise CorpusIOError(f"cannot write report to {path}: {e}") from e
