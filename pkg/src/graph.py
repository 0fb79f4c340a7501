"""
Simple undirected graphs and the edge surgeries used by both reduction recurrences
"""
from dataclasses import dataclass, field
from functools import cached_property
from typing import FrozenSet, Iterable, List, Sequence, Tuple

import networkx as nx

from src.errors import GraphError

Edge = Tuple[int, int]


def normalize_edge(u: int, v: int) -> Edge:
    """Order an unordered pair as (min, max)"""
    return (u, v) if u < v else (v, u)


@dataclass(frozen=True)
class Graph:
    """Immutable simple graph on vertices 0..vertex_count-1"""
    vertex_count: int
    edges: FrozenSet[Edge] = field(default_factory=frozenset)

    def __post_init__(self):
        if not isinstance(self.vertex_count, int) or self.vertex_count < 0:
            raise GraphError(f"vertex_count must be a nonnegative integer, got {self.vertex_count!r}")
        normalized = set()
        for u, v in self.edges:
            if u == v:
                raise GraphError(f"self-loop at vertex {u}")
            if not (0 <= u < self.vertex_count and 0 <= v < self.vertex_count):
                raise GraphError(f"endpoint out of range in edge ({u}, {v}) for {self.vertex_count} vertices")
            normalized.add(normalize_edge(u, v))
        object.__setattr__(self, 'edges', frozenset(normalized))

    @cached_property
    def adjacency(self) -> Tuple[int, ...]:
        """Neighbour bitmask per vertex"""
        masks = [0] * self.vertex_count
        for u, v in self.edges:
            masks[u] |= 1 << v
            masks[v] |= 1 << u
        return tuple(masks)

    @property
    def edge_count(self) -> int:
        return len(self.edges)

    def has_edge(self, u: int, v: int) -> bool:
        return normalize_edge(u, v) in self.edges

    def degree(self, u: int) -> int:
        return bin(self.adjacency[u]).count("1")

    def neighbors(self, u: int) -> List[int]:
        mask = self.adjacency[u]
        return [w for w in range(self.vertex_count) if mask >> w & 1]

    def sorted_edges(self) -> List[Edge]:
        return sorted(self.edges)

    def non_edges(self) -> List[Edge]:
        """Non-adjacent pairs (u < v) in lexicographic order"""
        adj = self.adjacency
        return [(u, v) for u in range(self.vertex_count)
                for v in range(u + 1, self.vertex_count) if not adj[u] >> v & 1]

    def max_edges(self) -> int:
        n = self.vertex_count
        return n * (n - 1) // 2

    def is_edgeless(self) -> bool:
        return not self.edges

    def is_complete(self) -> bool:
        return self.edge_count == self.max_edges()

    def is_connected(self) -> bool:
        return self.vertex_count <= 1 or len(self.component_masks()) == 1

    def is_tree(self) -> bool:
        return self.vertex_count >= 1 and self.edge_count == self.vertex_count - 1 and self.is_connected()

    def is_forest(self) -> bool:
        return self.edge_count == self.vertex_count - len(self.component_masks())

    def component_masks(self) -> List[int]:
        """Connected components as vertex bitmasks, ordered by smallest member"""
        adj = self.adjacency
        remaining = (1 << self.vertex_count) - 1
        found = []
        while remaining:
            seed = remaining & -remaining
            component = seed
            frontier = seed
            while frontier:
                v = frontier.bit_length() - 1
                frontier &= ~(1 << v)
                fresh = adj[v] & ~component
                component |= fresh
                frontier |= fresh
            found.append(component)
            remaining &= ~component
        return found

    def to_networkx(self) -> nx.Graph:
        g = nx.Graph()
        g.add_nodes_from(range(self.vertex_count))
        g.add_edges_from(self.edges)
        return g

    @classmethod
    def from_networkx(cls, g: nx.Graph) -> 'Graph':
        """Convert a networkx graph, relabeling nodes 0.. in sorted order"""
        if g.is_directed() or g.is_multigraph():
            raise GraphError("only simple undirected graphs are supported")
        index = {node: i for i, node in enumerate(sorted(g.nodes()))}
        return cls(len(index), frozenset(normalize_edge(index[a], index[b]) for a, b in g.edges()))

    def __repr__(self):
        return f"Graph({self.vertex_count}, {self.sorted_edges()})"


def make_graph(vertex_count: int, edges: Iterable[Sequence[int]] = ()) -> Graph:
    """Convenience constructor accepting any iterable of pairs"""
    return Graph(vertex_count, frozenset((int(u), int(v)) for u, v in edges))


def validate(graph: Graph) -> None:
    """Re-check every Graph invariant, raising GraphError on the first failure"""
    if graph.vertex_count < 0:
        raise GraphError("negative vertex count")
    for u, v in graph.edges:
        if u >= v:
            raise GraphError(f"edge ({u}, {v}) is not normalized or is a self-loop")
        if not (0 <= u and v < graph.vertex_count):
            raise GraphError(f"edge ({u}, {v}) out of range")


def _check_vertex(graph: Graph, u: int) -> None:
    if not 0 <= u < graph.vertex_count:
        raise GraphError(f"vertex {u} out of range for {graph.vertex_count} vertices")


def delete_edge(graph: Graph, u: int, v: int) -> Graph:
    """G - uv"""
    edge = normalize_edge(u, v)
    if edge not in graph.edges:
        raise GraphError(f"edge {edge} is not present")
    return Graph(graph.vertex_count, graph.edges - {edge})


def add_edge(graph: Graph, u: int, v: int) -> Graph:
    """G + uv for a non-adjacent pair"""
    if u == v:
        raise GraphError(f"cannot add a self-loop at vertex {u}")
    _check_vertex(graph, u)
    _check_vertex(graph, v)
    edge = normalize_edge(u, v)
    if edge in graph.edges:
        raise GraphError(f"edge {edge} is already present")
    return Graph(graph.vertex_count, graph.edges | {edge})


def contract_edge(graph: Graph, u: int, v: int) -> Graph:
    """
    G/uv: merge u and v whether or not they are adjacent.

    The merged vertex takes index min(u, v); indices above max(u, v) shift down
    by one. Parallel edges collapse and the uv edge, if any, disappears.
    """
    if u == v:
        raise GraphError(f"cannot contract vertex {u} with itself")
    _check_vertex(graph, u)
    _check_vertex(graph, v)
    keep, drop = normalize_edge(u, v)

    def relabel(w: int) -> int:
        if w == drop:
            return keep
        return w - 1 if w > drop else w

    merged = set()
    for a, b in graph.edges:
        a, b = relabel(a), relabel(b)
        if a != b:
            merged.add(normalize_edge(a, b))
    return Graph(graph.vertex_count - 1, frozenset(merged))


def remove_vertex(graph: Graph, u: int) -> Graph:
    """Induced subgraph on all vertices but u, indices above u shifted down"""
    _check_vertex(graph, u)
    kept = set()
    for a, b in graph.edges:
        if u in (a, b):
            continue
        kept.add((a - (a > u), b - (b > u)))
    return Graph(graph.vertex_count - 1, frozenset(kept))


def induced_subgraph(graph: Graph, vertices: Iterable[int]) -> Graph:
    """Induced subgraph relabeled to 0.. in increasing vertex order"""
    order = sorted(set(vertices))
    for u in order:
        _check_vertex(graph, u)
    index = {u: i for i, u in enumerate(order)}
    return Graph(len(order), frozenset(
        (index[a], index[b]) for a, b in graph.edges if a in index and b in index
    ))


def relabel(graph: Graph, permutation: Sequence[int]) -> Graph:
    """Apply a vertex permutation: vertex u becomes permutation[u]"""
    if sorted(permutation) != list(range(graph.vertex_count)):
        raise GraphError("relabeling must be a permutation of the vertex set")
    return Graph(graph.vertex_count, frozenset(
        normalize_edge(permutation[a], permutation[b]) for a, b in graph.edges
    ))


def components(graph: Graph) -> List[FrozenSet[int]]:
    """Vertex sets of the connected components, ordered by smallest member"""
    return [frozenset(w for w in range(graph.vertex_count) if mask >> w & 1)
            for mask in graph.component_masks()]


def disjoint_union(graphs: Iterable[Graph]) -> Graph:
    """Place graphs side by side, each shifted past the previous ones"""
    offset = 0
    edges = set()
    for g in graphs:
        edges.update((a + offset, b + offset) for a, b in g.edges)
        offset += g.vertex_count
    return Graph(offset, frozenset(edges))
