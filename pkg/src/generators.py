"""
Deterministic graph families and seeded random instances.

Every random draw comes from random.Random(seed).random(), the Mersenne Twister
(MT19937) stream that Python keeps stable for a given seed. Random labeled trees
use the Pruefer bijection: a sequence of n-2 entries in [0, n), each drawn as
int(rng.random() * n), decoded by networkx.from_prufer_sequence. Every labeled
tree on n vertices corresponds to exactly one sequence, so trees are uniform.
"""
import random
from enum import Enum
from typing import List, Optional, Sequence

import networkx as nx

from src.errors import GraphError
from src.graph import Graph, disjoint_union


class GraphKind(Enum):
    COMPLETE = "complete"
    PATH = "path"
    CYCLE = "cycle"
    STAR = "star"
    EDGELESS = "edgeless"
    RANDOM_TREE = "random-tree"
    RANDOM_GRAPH = "random-graph"
    FOREST = "forest"


def _check_order(n: int) -> None:
    if not isinstance(n, int) or n < 1:
        raise GraphError(f"graph order must be a positive integer, got {n!r}")


def complete_graph(n: int) -> Graph:
    _check_order(n)
    return Graph.from_networkx(nx.complete_graph(n))


def path_graph(n: int) -> Graph:
    _check_order(n)
    return Graph.from_networkx(nx.path_graph(n))


def cycle_graph(n: int) -> Graph:
    _check_order(n)
    if n < 3:
        raise GraphError(f"a simple cycle needs at least 3 vertices, got {n}")
    return Graph.from_networkx(nx.cycle_graph(n))


def star_graph(n: int) -> Graph:
    """Star on n vertices in total: centre 0 joined to 1..n-1"""
    _check_order(n)
    return Graph.from_networkx(nx.star_graph(n - 1))


def edgeless_graph(n: int) -> Graph:
    _check_order(n)
    return Graph(n)


def _tree_from_rng(n: int, rng: random.Random) -> Graph:
    if n == 1:
        return Graph(1)
    sequence = [int(rng.random() * n) for _ in range(n - 2)]
    return Graph.from_networkx(nx.from_prufer_sequence(sequence))


def random_tree(n: int, seed: int = 0) -> Graph:
    """Uniform labeled tree on n vertices via a Pruefer sequence"""
    _check_order(n)
    return _tree_from_rng(n, random.Random(seed))


def random_graph(n: int, p: float, seed: int = 0) -> Graph:
    """G(n, p): each pair (u < v, lexicographic) kept when rng.random() < p"""
    _check_order(n)
    if not 0 <= p <= 1:
        raise GraphError(f"edge probability must lie in [0, 1], got {p}")
    rng = random.Random(seed)
    edges = [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < p]
    return Graph(n, frozenset(edges))


def random_forest(part_sizes: Sequence[int], seed: int = 0) -> Graph:
    """One random tree per part, parts laid out contiguously in the given order"""
    if not part_sizes:
        raise GraphError("a forest needs at least one part")
    for size in part_sizes:
        _check_order(size)
    rng = random.Random(seed)
    return disjoint_union(_tree_from_rng(size, rng) for size in part_sizes)


def generate(kind: GraphKind, sizes: Sequence[int], p: Optional[float] = None, seed: int = 0) -> Graph:
    """Dispatch on kind; sizes holds n (or the forest part sizes)"""
    if kind is GraphKind.FOREST:
        return random_forest(sizes, seed)
    if len(sizes) != 1:
        raise GraphError(f"{kind.value} takes exactly one size, got {list(sizes)}")
    n = sizes[0]
    if kind is GraphKind.RANDOM_GRAPH:
        if p is None:
            raise GraphError("random-graph needs an edge probability")
        return random_graph(n, p, seed)
    builders = {
        GraphKind.COMPLETE: complete_graph,
        GraphKind.PATH: path_graph,
        GraphKind.CYCLE: cycle_graph,
        GraphKind.STAR: star_graph,
        GraphKind.EDGELESS: edgeless_graph,
    }
    if kind is GraphKind.RANDOM_TREE:
        return random_tree(n, seed)
    return builders[kind](n)


def connected_graphs(max_order: int) -> List[Graph]:
    """Every connected graph shape on 1..max_order vertices (max_order <= 7), from the networkx atlas"""
    if max_order > 7:
        raise GraphError("the graph atlas only covers graphs with up to 7 vertices")
    return [Graph.from_networkx(g) for g in nx.graph_atlas_g()
            if 1 <= g.number_of_nodes() <= max_order and nx.is_connected(g)]


def trees(max_order: int) -> List[Graph]:
    """Every tree shape on 1..max_order vertices (max_order <= 7)"""
    return [g for g in connected_graphs(max_order) if g.is_tree()]
