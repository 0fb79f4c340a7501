"""
Text formats: the "n <count>" edge list and the DIMACS .col subset
"""
import logging
import sys
from enum import Enum
from typing import Optional, Set

from src.errors import GraphError, GraphParseError
from src.graph import Edge, Graph, normalize_edge

logger = logging.getLogger(__name__)


class GraphFormat(Enum):
    EDGELIST = "edgelist"
    DIMACS = "dimacs"


def _parse_int(token: str, line_number: int) -> int:
    try:
        return int(token)
    except ValueError:
        raise GraphParseError(f"expected an integer, got {token!r}", line_number) from None


def _checked_edge(u: int, v: int, vertex_count: int, line_number: int) -> Edge:
    if u == v:
        raise GraphParseError(f"self-loop at vertex {u}", line_number)
    if not (0 <= u < vertex_count and 0 <= v < vertex_count):
        raise GraphParseError(f"endpoint out of range for {vertex_count} vertices", line_number)
    return normalize_edge(u, v)


def parse_edge_list(text: str) -> Graph:
    """
    Parse the edge-list format.

    The first significant line is "n <count>"; every other one is "<u> <v>"
    with 0-based endpoints. Blank lines and "#" comments are skipped and
    duplicate edges collapse.
    """
    vertex_count: Optional[int] = None
    edges: Set[Edge] = set()
    for line_number, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        tokens = line.split()
        if tokens[0] == "n":
            if vertex_count is not None:
                raise GraphParseError("duplicate 'n' header", line_number)
            if len(tokens) != 2:
                raise GraphParseError("header must read 'n <count>'", line_number)
            vertex_count = _parse_int(tokens[1], line_number)
            if vertex_count < 0:
                raise GraphParseError("vertex count must be nonnegative", line_number)
            continue
        if vertex_count is None:
            raise GraphParseError("missing 'n <count>' header before first edge", line_number)
        if len(tokens) != 2:
            raise GraphParseError(f"malformed edge line {line!r}", line_number)
        u, v = (_parse_int(t, line_number) for t in tokens)
        edges.add(_checked_edge(u, v, vertex_count, line_number))
    if vertex_count is None:
        raise GraphParseError("missing 'n <count>' header")
    return Graph(vertex_count, frozenset(edges))


def parse_dimacs(text: str) -> Graph:
    """Parse DIMACS .col text ("c" comments, one "p edge n m", 1-based "e u v" lines)"""
    vertex_count: Optional[int] = None
    declared_edges = 0
    edge_lines = 0
    edges: Set[Edge] = set()
    for line_number, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("c"):
            continue
        tokens = line.split()
        if tokens[0] == "p":
            if vertex_count is not None:
                raise GraphParseError("duplicate 'p' line", line_number)
            if len(tokens) != 4 or tokens[1] != "edge":
                raise GraphParseError("problem line must read 'p edge <n> <m>'", line_number)
            vertex_count = _parse_int(tokens[2], line_number)
            declared_edges = _parse_int(tokens[3], line_number)
            if vertex_count < 0 or declared_edges < 0:
                raise GraphParseError("counts must be nonnegative", line_number)
        elif tokens[0] == "e":
            if vertex_count is None:
                raise GraphParseError("missing 'p edge' line before first edge", line_number)
            if len(tokens) != 3:
                raise GraphParseError(f"malformed edge line {line!r}", line_number)
            u, v = (_parse_int(t, line_number) - 1 for t in tokens[1:])
            edge = _checked_edge(u, v, vertex_count, line_number)
            edge_lines += 1
            if edge in edges:
                logger.warning("line %d: duplicate edge %s collapsed", line_number, (u + 1, v + 1))
            edges.add(edge)
        else:
            raise GraphParseError(f"unknown line type {tokens[0]!r}", line_number)
    if vertex_count is None:
        raise GraphParseError("missing 'p edge' line")
    if edge_lines != declared_edges:
        logger.warning("problem line declares %d edges, found %d edge lines", declared_edges, edge_lines)
    return Graph(vertex_count, frozenset(edges))


def serialize_edge_list(graph: Graph) -> str:
    lines = [f"n {graph.vertex_count}"]
    lines.extend(f"{u} {v}" for u, v in graph.sorted_edges())
    return "\n".join(lines) + "\n"


def serialize_dimacs(graph: Graph) -> str:
    lines = [f"p edge {graph.vertex_count} {graph.edge_count}"]
    lines.extend(f"e {u + 1} {v + 1}" for u, v in graph.sorted_edges())
    return "\n".join(lines) + "\n"


def detect_format(text: str) -> GraphFormat:
    """DIMACS when the first significant line starts with 'p' or 'c', else edge list"""
    for raw in text.splitlines():
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        return GraphFormat.DIMACS if line.split()[0] in ("p", "c") else GraphFormat.EDGELIST
    return GraphFormat.EDGELIST


def parse_graph(text: str, fmt: Optional[GraphFormat] = None) -> Graph:
    fmt = fmt or detect_format(text)
    try:
        if fmt is GraphFormat.DIMACS:
            return parse_dimacs(text)
        return parse_edge_list(text)
    except GraphError as e:
        raise GraphParseError(str(e)) from e


def serialize_graph(graph: Graph, fmt: GraphFormat = GraphFormat.EDGELIST) -> str:
    if fmt is GraphFormat.DIMACS:
        return serialize_dimacs(graph)
    return serialize_edge_list(graph)


def read_graph(path: str, fmt: Optional[GraphFormat] = None) -> Graph:
    """Read a graph file; "-" reads standard input"""
    if path == "-":
        text = sys.stdin.read()
    else:
        with open(path, 'r', encoding='utf-8') as f:
            text = f.read()
    return parse_graph(text, fmt)
