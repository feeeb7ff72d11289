"""
Graph corpora: labelled graphs in deterministic source order.
"""

import hashlib
import logging
from dataclasses import dataclass
from enum import Enum
from pathlib import Path
from typing import Callable, Iterable, Iterator, List, Optional, Sequence, Tuple, Union

from critcolor.core.errors import CorpusIOError, GraphError, MalformedEntry
from critcolor.graph.formats import from_graph6, parse_dimacs, parse_edge_list, to_graph6
from critcolor.graph.graph_core import Graph

logger = logging.getLogger(__name__)


class CorpusFormat(str, Enum):
    GRAPH6 = "graph6"
    DIMACS = "dimacs"
    EDGES = "edges"


@dataclass(frozen=True)
class CorpusEntry:
    label: str
    graph: Graph


class Corpus:
    """
    An ordered, re-iterable sequence of labelled graphs.

    Generated corpora are produced on demand by `factory`, so an exhaustive
    scan never holds every graph at once.
    """

    def __init__(
        self,
        name: str,
        factory: Callable[[], Iterator[CorpusEntry]],
        size: Optional[int] = None,
        malformed: Optional[List[MalformedEntry]] = None,
    ):
        self.name = name
        self._factory = factory
        self._size = size
        self.malformed: List[MalformedEntry] = list(malformed or [])

    @classmethod
    def from_entries(
        cls, name: str, entries: Sequence[CorpusEntry], malformed: Optional[List[MalformedEntry]] = None
    ) -> "Corpus":
        entries = list(entries)
        return cls(name, lambda: iter(entries), len(entries), malformed)

    @classmethod
    def from_graphs(cls, name: str, graphs: Iterable[Union[Graph, Tuple[str, Graph]]]) -> "Corpus":
        """Wrap graphs, labelling unlabelled ones name:index."""
        entries = []
        for index, item in enumerate(graphs):
            if isinstance(item, Graph):
                entries.append(CorpusEntry(f"{name}:{index}", item))
            else:
                entries.append(CorpusEntry(*item))
        return cls.from_entries(name, entries)

    def __iter__(self) -> Iterator[CorpusEntry]:
        return self._factory()

    def __len__(self) -> int:
        if self._size is None:
            self._size = sum(1 for _ in self)
        return self._size

    def digest(self) -> str:
        """SHA-256 over the graph6 lines of every entry in source order."""
        h = hashlib.sha256()
        for entry in self:
            h.update(to_graph6(entry.graph).encode("ascii"))
            h.update(b"\n")
        return h.hexdigest()


def _read_lines(path: Path) -> List[str]:
    try:
        return path.read_text(encoding="utf-8").splitlines()
    except (OSError, UnicodeDecodeError) as e:
        raise CorpusIOError(f"cannot read {path}: {e}") from e


def _reject(bad: MalformedEntry, strict: bool, malformed: List[MalformedEntry]) -> None:
    if strict:
        raise bad
    logger.warning(f"skipping malformed entry {bad}")
    malformed.append(bad)


def _load_graph6(path: Path, strict: bool) -> Corpus:
    entries: List[CorpusEntry] = []
    malformed: List[MalformedEntry] = []
    for lineno, line in enumerate(_read_lines(path), start=1):
        if not line.strip():
            continue
        try:
            entries.append(CorpusEntry(f"{path}:{lineno}", from_graph6(line)))
        except GraphError as e:
            _reject(MalformedEntry(str(path), lineno, str(e)), strict, malformed)
    return Corpus.from_entries(str(path), entries, malformed)


def _load_per_file(path: Path, parser: Callable[[List[str]], Graph], strict: bool) -> Corpus:
    files = sorted(p for p in path.iterdir() if p.is_file()) if path.is_dir() else [path]
    entries: List[CorpusEntry] = []
    malformed: List[MalformedEntry] = []
    for f in files:
        lines = _read_lines(f)
        if not any(line.strip() for line in lines):
            continue
        try:
            entries.append(CorpusEntry(str(f), parser(lines)))
        except GraphError as e:
            _reject(MalformedEntry(str(f), 0, str(e)), strict, malformed)
    return Corpus.from_entries(str(path), entries, malformed)


def load_corpus(path: Union[str, Path], format: Union[str, CorpusFormat] = CorpusFormat.GRAPH6, strict: bool = False) -> Corpus:
    """
    Read a corpus file (or, for dimacs and edges, a directory of files).

    graph6 files hold one graph per line, labelled path:line. DIMACS and edge
    list inputs hold one graph per file. Malformed entries are collected in
    `Corpus.malformed` unless strict, in which case the first one is raised.

    Raises:
        CorpusIOError, MalformedEntry
    """
    path = Path(path)
    fmt = CorpusFormat(format)
    if not path.exists():
        raise CorpusIOError(f"no such corpus: {path}")

    if fmt is CorpusFormat.GRAPH6:
        if path.is_dir():
            raise CorpusIOError(f"graph6 corpus must be a file, got directory {path}")
        corpus = _load_graph6(path, strict)
    elif fmt is CorpusFormat.DIMACS:
        corpus = _load_per_file(path, parse_dimacs, strict)
    else:
        corpus = _load_per_file(path, parse_edge_list, strict)

    logger.info(f"loaded {len(corpus)} graphs from {path} ({len(corpus.malformed)} malformed)")
    return corpus
