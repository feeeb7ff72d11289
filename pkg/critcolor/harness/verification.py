"""
Verification campaigns: statement scans, per-graph analysis and the component
shape sample scan.

Per-graph work runs in worker processes when more than one worker is
configured; results are merged in source order so reports do not depend on
scheduling.
"""

import hashlib
import logging
import random
import time
from typing import Callable, Iterable, Iterator, List, Optional, Tuple

from joblib import Parallel, delayed

from critcolor.core.budget import Budget
from critcolor.core.config import get_settings
from critcolor.core.errors import CritcolorError, InvalidParameter, NoEdges, RangeTooLarge, Timeout
from critcolor.coloring.critical import critical_subgraph, critical_vertices
from critcolor.coloring.solver import chromatic_number
from critcolor.graph.formats import to_graph6
from critcolor.graph.graph_core import Graph
from critcolor.harness.corpus import Corpus
from critcolor.harness.generators import random_graph
from critcolor.harness.report import GraphRecord, RecordStatus, Report
from critcolor.mozhan.lemma import verify_lemma1
from critcolor.mozhan.partition import PartitionScheme, SearchMode
from critcolor.mozhan.search import find_minimal_partitioned_coloring
from critcolor.structure.profile import GraphProfile
from critcolor.structure.statements import CHECKS, Statement, check_statement, structure_report

logger = logging.getLogger(__name__)

LEMMA1_MAX_ORDER = 9
LEMMA1_MIN_ORDER = 4


def _resolve(budget_ms: Optional[int], workers: Optional[int]) -> Tuple[Optional[int], int]:
    settings = get_settings()
    budget_ms = settings.budget_ms if budget_ms is None else budget_ms
    workers = settings.workers if workers is None else workers
    if workers < 1:
        raise InvalidParameter(f"worker count must be at least 1, got {workers}")
    return budget_ms, workers


def _map_in_order(fn: Callable, tasks: Iterable, workers: int) -> Iterator:
    if workers == 1:
        return map(fn, tasks)
    # results come back in submission order
    return Parallel(n_jobs=workers, return_as="generator", batch_size=16)(delayed(fn)(t) for t in tasks)


def _error_text(e: Exception) -> str:
    return f"{type(e).__name__}: {e}"


# ==================== STATEMENT SCANS ====================


def _check_entry(task: Tuple[str, Graph, str, Optional[int]]) -> GraphRecord:
    label, graph, statement, budget_ms = task
    budget = Budget(budget_ms)
    try:
        profile = GraphProfile(graph, budget)
        outcome = check_statement(graph, Statement(statement), profile, budget)
        structure = None
        if outcome.hypothesis or outcome.violation:
            structure = structure_report(graph, budget, profile)
    except Timeout as e:
        return GraphRecord(label, RecordStatus.SKIPPED, error=str(e))
    except NoEdges as e:
        return GraphRecord(label, RecordStatus.NOT_APPLICABLE, error=str(e))
    except CritcolorError as e:
        return GraphRecord(label, RecordStatus.ERROR, error=_error_text(e))

    if outcome.violation:
        status = RecordStatus.VIOLATION
    elif outcome.hypothesis:
        status = RecordStatus.SATISFIED
    else:
        status = RecordStatus.PASSED
    detail = outcome.to_dict()
    if structure is not None:
        detail["structure"] = structure.to_dict()
    return GraphRecord(label, status, detail=detail)


def verify_statement(
    corpus: Corpus,
    statement: Statement,
    budget_ms: Optional[int] = None,
    workers: Optional[int] = None,
) -> Report:
    """
    Evaluate one statement on every corpus graph.

    Only hypothesis satisfiers, violations, skipped graphs and errors are kept
    as records; plain passes are counted.
    """
    statement = Statement(statement)
    budget_ms, workers = _resolve(budget_ms, workers)
    report = Report(
        kind="verify",
        corpus=corpus.name,
        digest=corpus.digest(),
        parameters={"statement": statement.value, "budget_ms": budget_ms},
        malformed=[str(m) for m in corpus.malformed],
    )
    report.hypothesis_satisfied[statement.value] = 0
    report.violations[statement.value] = 0

    t0 = time.perf_counter()
    tasks = ((e.label, e.graph, statement.value, budget_ms) for e in corpus)
    for record in _map_in_order(_check_entry, tasks, workers):
        _merge_statement_record(report, statement, record)
    elapsed = time.perf_counter() - t0

    logger.info(
        f"{statement.value} over {report.scanned} graphs of {corpus.name}: "
        f"{report.hypothesis_satisfied[statement.value]} satisfy the hypothesis, "
        f"{report.violations[statement.value]} violations ({elapsed:.2f}s)"
    )
    return report


def _merge_statement_record(report: Report, statement: Statement, record: GraphRecord) -> None:
    report.scanned += 1
    report.count(record.status.value)
    if record.status is RecordStatus.SKIPPED:
        logger.warning(f"{record.label}: skipped ({record.error})")
    if record.status is RecordStatus.ERROR:
        logger.warning(f"{record.label}: {record.error}")

    if record.detail is not None:
        for note in record.detail.get("notes", []):
            report.notes.append(f"{record.label}: {note}")
        if record.detail["hypothesis"]:
            report.hypothesis_satisfied[statement.value] += 1
        if record.detail["violation"]:
            report.violations[statement.value] += 1

    if record.status is not RecordStatus.PASSED or (record.detail and record.detail.get("notes")):
        report.records.append(record)


# ==================== ANALYSIS ====================


def _analyze_entry(task: Tuple[str, Graph, Optional[int]]) -> GraphRecord:
    label, graph, budget_ms = task
    try:
        structure = structure_report(graph, Budget(budget_ms))
    except Timeout as e:
        return GraphRecord(label, RecordStatus.SKIPPED, error=str(e))
    except CritcolorError as e:
        return GraphRecord(label, RecordStatus.ERROR, error=_error_text(e))
    detail = structure.to_dict()
    detail["graph6"] = to_graph6(graph)
    violated = any(o.get("violation") for o in structure.outcomes.values())
    return GraphRecord(label, RecordStatus.VIOLATION if violated else RecordStatus.PASSED, detail=detail)


def analyze(corpus: Corpus, budget_ms: Optional[int] = None, workers: Optional[int] = None) -> Report:
    """Full structure report with every statement outcome for each graph."""
    budget_ms, workers = _resolve(budget_ms, workers)
    report = Report(
        kind="analyze",
        corpus=corpus.name,
        digest=corpus.digest(),
        parameters={"budget_ms": budget_ms},
        malformed=[str(m) for m in corpus.malformed],
    )
    for statement in CHECKS:
        report.hypothesis_satisfied[statement.value] = 0
        report.violations[statement.value] = 0

    t0 = time.perf_counter()
    tasks = ((e.label, e.graph, budget_ms) for e in corpus)
    for record in _map_in_order(_analyze_entry, tasks, workers):
        report.scanned += 1
        report.count(record.status.value)
        report.records.append(record)
        if record.detail is None:
            logger.warning(f"{record.label}: {record.status.value} ({record.error})")
            continue
        for name, outcome in record.detail["outcomes"].items():
            if "error" in outcome:
                continue
            report.hypothesis_satisfied[name] += int(outcome["hypothesis"])
            report.violations[name] += int(outcome["violation"])
            for note in outcome["notes"]:
                report.notes.append(f"{record.label}: {note}")
    logger.info(f"analyzed {report.scanned} graphs of {corpus.name} ({time.perf_counter() - t0:.2f}s)")
    return report


# ==================== COMPONENT SHAPE SCAN ====================


def _lemma1_instance(rng: random.Random, max_n: int, budget: Budget) -> Tuple[Graph, int, Optional[PartitionScheme]]:
    n = rng.randint(LEMMA1_MIN_ORDER, max_n)
    G = random_graph(n, rng.uniform(0.3, 0.9), rng.randrange(2**32))
    candidates = sorted(critical_vertices(G, budget))
    if not candidates:
        G = critical_subgraph(G, budget)
        candidates = list(range(G.n))
    x = rng.choice(candidates)

    chi, _ = chromatic_number(G, budget)
    if chi >= 5:
        r1 = rng.randint(2, chi - 3)
        scheme = PartitionScheme((r1, chi - 1 - r1))
    elif chi >= 3:
        scheme = PartitionScheme((chi - 1,))
    else:
        scheme = None
    return G, x, scheme


def _lemma1_sample(task: Tuple[int, int, int, Optional[int]]) -> GraphRecord:
    seed, index, max_n, budget_ms = task
    label = f"lemma1(seed={seed}):{index}"
    rng = random.Random(seed * 1_000_003 + index)
    budget = Budget(budget_ms)
    try:
        G, x, scheme = _lemma1_instance(rng, max_n, budget)
        if scheme is None:
            return GraphRecord(label, RecordStatus.NOT_APPLICABLE, detail={"graph6": to_graph6(G)})
        pi = find_minimal_partitioned_coloring(G, scheme, x, SearchMode.EXACT, budget=budget)
        check = verify_lemma1(G, pi)
    except Timeout as e:
        return GraphRecord(label, RecordStatus.SKIPPED, error=str(e))
    except CritcolorError as e:
        return GraphRecord(label, RecordStatus.ERROR, error=_error_text(e))

    detail = check.to_dict()
    detail["graph6"] = to_graph6(G)
    detail["coloring"] = pi.to_dict()
    return GraphRecord(label, RecordStatus.PASSED if check.passed else RecordStatus.VIOLATION, detail=detail)


def lemma1_scan(
    samples: int,
    max_n: int,
    seed: int,
    budget_ms: Optional[int] = None,
    workers: Optional[int] = None,
) -> Report:
    """
    Check Z-component shapes on seeded random instances with certified minimal colourings.

    Raises:
        RangeTooLarge: max_n above 9, where exact minimality gets too slow.
        InvalidParameter: negative samples or max_n below 4.
    """
    if max_n > LEMMA1_MAX_ORDER:
        raise RangeTooLarge(f"lemma1 scan needs max_n <= {LEMMA1_MAX_ORDER}, got {max_n}")
    if max_n < LEMMA1_MIN_ORDER or samples < 0:
        raise InvalidParameter(f"need samples >= 0 and max_n >= {LEMMA1_MIN_ORDER}")
    budget_ms, workers = _resolve(budget_ms, workers)

    name = f"lemma1(samples={samples},max_n={max_n},seed={seed})"
    report = Report(
        kind="lemma1",
        corpus=name,
        digest="",
        parameters={"samples": samples, "max_n": max_n, "seed": seed, "budget_ms": budget_ms},
    )
    report.violations["lemma1"] = 0
    report.hypothesis_satisfied["lemma1"] = 0

    t0 = time.perf_counter()
    graph6_lines: List[str] = []
    tasks = ((seed, index, max_n, budget_ms) for index in range(samples))
    for record in _map_in_order(_lemma1_sample, tasks, workers):
        report.scanned += 1
        report.count(record.status.value)
        report.records.append(record)
        if record.detail is not None:
            graph6_lines.append(record.detail["graph6"])
        for group in (record.detail or {}).get("groups", []):
            if group["applies"]:
                report.hypothesis_satisfied["lemma1"] += 1
                report.count("groups_passed" if group["passed"] else "groups_failed")
        if record.status is RecordStatus.VIOLATION:
            report.violations["lemma1"] += 1
        elif record.status in (RecordStatus.SKIPPED, RecordStatus.ERROR):
            logger.warning(f"{record.label}: {record.status.value} ({record.error})")

    report.digest = _digest_lines(graph6_lines)
    logger.info(
        f"lemma1 scan: {report.scanned} samples, {report.violations['lemma1']} violations "
        f"({time.perf_counter() - t0:.2f}s)"
    )
    return report


def _digest_lines(lines: List[str]) -> str:
    h = hashlib.sha256()
    for line in lines:
        h.update(line.encode("ascii") + b"\n")
    return h.hexdigest()
