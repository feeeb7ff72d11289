"""
Graph file formats: graph6, DIMACS coloring instances and plain edge lists.
"""

from typing import Dict, List, Tuple

import networkx as nx

from critcolor.core.errors import GraphError, MalformedEncoding
from critcolor.graph.graph_core import Graph, from_edge_list

GRAPH6_HEADER = ">>graph6<<"


# ==================== GRAPH6 ====================


def from_graph6(text: str) -> Graph:
    """Decode one graph6 line (optional >>graph6<< header, trailing newline allowed)."""
    line = text.strip()
    if line.startswith(GRAPH6_HEADER):
        line = line[len(GRAPH6_HEADER):]
    if not line:
        raise MalformedEncoding("empty graph6 string")
    bad = [ch for ch in line if not 63 <= ord(ch) <= 126]
    if bad:
        raise MalformedEncoding(f"graph6 characters must lie in '?'..'~', found {bad[0]!r}")
    try:
        G = nx.from_graph6_bytes(line.encode("ascii"))
    except (ValueError, nx.NetworkXError) as e:
        raise MalformedEncoding(f"invalid graph6 string {line!r}: {e}") from e
    return Graph.from_networkx(G)


def to_graph6(G: Graph) -> str:
    return nx.to_graph6_bytes(G.to_networkx(), header=False).decode("ascii").strip()


# ==================== DIMACS ====================


def parse_dimacs(lines: List[str]) -> Graph:
    """
    Parse a DIMACS coloring instance.

    Format:
        c comment lines
        p edge <n> <m>
        e u v     (1-based vertex ids)
    """
    n = None
    edges: List[Tuple[int, int]] = []
    for lineno, raw in enumerate(lines, start=1):
        parts = raw.split()
        if not parts or parts[0] == "c":
            continue
        if parts[0] == "p":
            if len(parts) < 4 or n is not None:
                raise MalformedEncoding(f"line {lineno}: bad problem line {raw.strip()!r}")
            try:
                n = int(parts[2])
            except ValueError:
                raise MalformedEncoding(f"line {lineno}: vertex count is not an integer")
        elif parts[0] == "e":
            if n is None:
                raise MalformedEncoding(f"line {lineno}: edge before problem line")
            if len(parts) < 3:
                raise MalformedEncoding(f"line {lineno}: edge line needs two endpoints")
            try:
                edges.append((int(parts[1]) - 1, int(parts[2]) - 1))
            except ValueError:
                raise MalformedEncoding(f"line {lineno}: edge endpoints must be integers")
        else:
            raise MalformedEncoding(f"line {lineno}: unknown line type {parts[0]!r}")
    if n is None:
        raise MalformedEncoding("missing 'p edge N M' line")
    try:
        return from_edge_list(n, edges)
    except GraphError as e:
        raise MalformedEncoding(f"invalid DIMACS graph: {e}") from e


def to_dimacs(G: Graph) -> str:
    lines = [f"p edge {G.n} {G.edge_count}"]
    lines += [f"e {u + 1} {v + 1}" for u, v in G.edges()]
    return "\n".join(lines) + "\n"


# ==================== EDGE LIST ====================


def parse_edge_list(lines: List[str]) -> Graph:
    """
    Parse plain edge-list text: the vertex count N on the first data line, then
    "u v" per line. Integer endpoints are 0-indexed; any other tokens are
    labels mapped to indices in order of first appearance.
    """
    data = [(i, raw.split()) for i, raw in enumerate(lines, start=1)]
    data = [(i, parts) for i, parts in data if parts and not parts[0].startswith("#")]
    if not data:
        raise MalformedEncoding("missing vertex count line")
    first_line, header = data[0]
    try:
        n = int(header[0])
    except ValueError:
        raise MalformedEncoding(f"line {first_line}: vertex count is not an integer")
    if len(header) != 1 or n < 0:
        raise MalformedEncoding(f"line {first_line}: expected a single non-negative vertex count")

    pairs = []
    for lineno, parts in data[1:]:
        if len(parts) != 2:
            raise MalformedEncoding(f"line {lineno}: expected 'u v', got {' '.join(parts)!r}")
        pairs.append((lineno, parts))

    labelled = any(not _is_int(tok) for _, parts in pairs for tok in parts)
    index: Dict[str, int] = {}

    def vertex(tok: str) -> int:
        if not labelled:
            return int(tok)
        if tok not in index:
            index[tok] = len(index)
        return index[tok]

    edges = [(vertex(a), vertex(b)) for _, (a, b) in pairs]
    if labelled and len(index) > n:
        raise MalformedEncoding(f"{len(index)} distinct labels exceed declared vertex count {n}")
    try:
        return from_edge_list(n, edges)
    except GraphError as e:
        raise MalformedEncoding(f"invalid edge list: {e}") from e


def to_edge_list(G: Graph) -> str:
    lines = [str(G.n)] + [f"{u} {v}" for u, v in G.edges()]
    return "\n".join(lines) + "\n"


def _is_int(token: str) -> bool:
    try:
        int(token)
        return True
    except ValueError:
        return False
