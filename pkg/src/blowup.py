"""
The blow-up G^b: every vertex becomes a b-clique and every edge a complete
bipartite join between the two cliques. Vertex u owns the block u*b .. u*b+b-1.
"""
from typing import List, Sequence, Tuple

from src.errors import ColoringError, GraphError
from src.graph import Edge, Graph, normalize_edge
from src.oracle import Coloring


def check_fold(b: int) -> None:
    """Reject anything but a positive integer fold"""
    if not isinstance(b, int) or b < 1:
        raise GraphError(f"fold b must be a positive integer, got {b!r}")


def blowup_vertex(u: int, i: int, b: int) -> int:
    """Index of copy i (0-based) of vertex u"""
    check_fold(b)
    if not 0 <= i < b:
        raise GraphError(f"copy index {i} out of range for b={b}")
    return u * b + i


def blowup_pair(u: int, v: int, i: int, j: int, b: int) -> Edge:
    """Blown pair joining copy i of u with copy j of v"""
    return normalize_edge(blowup_vertex(u, i, b), blowup_vertex(v, j, b))


def block(u: int, b: int) -> range:
    return range(u * b, u * b + b)


def blow_up(graph: Graph, b: int) -> Graph:
    """G^b with |V| * b vertices and |V| * C(b, 2) + |E| * b^2 edges"""
    check_fold(b)
    edges = set()
    for u in range(graph.vertex_count):
        copies = block(u, b)
        edges.update((x, y) for x in copies for y in copies if x < y)
    for u, v in graph.edges:
        edges.update(normalize_edge(x, y) for x in block(u, b) for y in block(v, b))
    return Graph(graph.vertex_count * b, frozenset(edges))


def lift_coloring(graph: Graph, coloring: Coloring) -> Tuple[int, ...]:
    """Ordinary colouring of G^b: copy i of u takes the i-th smallest colour of u's set"""
    if len(coloring.assignment) != graph.vertex_count:
        raise ColoringError("colouring does not cover the graph")
    lifted: List[int] = []
    for colors in coloring.assignment:
        lifted.extend(sorted(colors))
    return tuple(lifted)


def collapse_coloring(graph: Graph, colors: Sequence[int], b: int, palette: int) -> Coloring:
    """b-fold colouring of G read off an ordinary colouring of G^b, block by block"""
    check_fold(b)
    if len(colors) != graph.vertex_count * b:
        raise ColoringError(f"expected {graph.vertex_count * b} colours, got {len(colors)}")
    sets = []
    for u in range(graph.vertex_count):
        chosen = frozenset(colors[x] for x in block(u, b))
        if len(chosen) != b:
            raise ColoringError(f"block of vertex {u} repeats a colour")
        sets.append(chosen)
    return Coloring(tuple(sets), palette, b)
