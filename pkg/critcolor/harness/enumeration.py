"""
Exhaustive labelled-graph scans by minimum degree.

A graph on n vertices has minimum degree >= d exactly when its complement has
maximum degree <= n - 1 - d, so the scan enumerates those sparse complements.
"""

from itertools import combinations
from typing import Iterator, List, Tuple

from critcolor.core.errors import InvalidParameter, RangeTooLarge
from critcolor.graph.graph_core import complement, from_edge_list
from critcolor.harness.corpus import Corpus, CorpusEntry

MAX_SCAN_ORDER = 10
MAX_COMPLEMENT_DEGREE = 3


def _bounded_degree_edge_sets(n: int, cap: int) -> Iterator[List[Tuple[int, int]]]:
    """Every edge set on n labelled vertices with all degrees <= cap, exclusion branch first."""
    pairs = list(combinations(range(n), 2))
    degree = [0] * n
    chosen: List[Tuple[int, int]] = []

    def extend(index: int) -> Iterator[List[Tuple[int, int]]]:
        if index == len(pairs):
            yield list(chosen)
            return
        yield from extend(index + 1)
        u, v = pairs[index]
        if degree[u] < cap and degree[v] < cap:
            degree[u] += 1
            degree[v] += 1
            chosen.append((u, v))
            yield from extend(index + 1)
            chosen.pop()
            degree[u] -= 1
            degree[v] -= 1

    yield from extend(0)


def exhaustive_min_degree_scan(n: int, min_deg: int) -> Corpus:
    """
    All labelled graphs on n vertices with minimum degree >= min_deg.

    Raises:
        RangeTooLarge: n > 10 or min_deg < n - 4.
    """
    if n < 1:
        raise InvalidParameter(f"scan order must be positive, got {n}")
    if n > MAX_SCAN_ORDER or min_deg < n - 1 - MAX_COMPLEMENT_DEGREE:
        raise RangeTooLarge(
            f"scan of n={n}, min_deg={min_deg} is out of range (need n <= {MAX_SCAN_ORDER}, "
            f"min_deg >= n - {MAX_COMPLEMENT_DEGREE + 1})"
        )
    name = f"exhaustive(n={n},min_deg={min_deg})"
    cap = n - 1 - min_deg

    def entries() -> Iterator[CorpusEntry]:
        if cap < 0:
            return
        for index, edges in enumerate(_bounded_degree_edge_sets(n, cap)):
            yield CorpusEntry(f"{name}:{index}", complement(from_edge_list(n, edges)))

    return Corpus(name, entries)
