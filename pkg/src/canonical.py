"""
Order-invariant graph keys for memoizing the deletion-contraction engine.

Within the size bound the key is the lexicographically smallest upper-triangular
adjacency bit-string over every vertex order that lists vertices by
non-increasing degree. The search only branches on the candidates that minimise
the next column, skips twins (swapping two twins is an automorphism that fixes
everything placed so far) and cuts prefixes already worse than the best string.
Beyond the bound the key is the labeled bit-string under a different flag byte.
"""
from dataclasses import dataclass
from typing import List, Optional, Sequence

from src.graph import Graph

CANONICAL_FLAG = b"C"
LABELED_FLAG = b"L"


@dataclass(frozen=True)
class CanonicalKey:
    encoding: bytes

    @property
    def is_canonical(self) -> bool:
        return self.encoding[:1] == CANONICAL_FLAG


def _encode(flag: bytes, n: int, columns: Sequence[int]) -> CanonicalKey:
    # column j holds j bits: adjacency of position j with positions 0..j-1, position 0 most significant
    bits = 0
    for j, column in enumerate(columns):
        bits = (bits << j) | column
    width = (n * (n - 1) // 2 + 7) // 8
    return CanonicalKey(flag + n.to_bytes(4, "big") + bits.to_bytes(width, "big"))


def _columns(adj: Sequence[int], order: Sequence[int]) -> List[int]:
    columns = []
    for j, v in enumerate(order):
        column = 0
        for u in order[:j]:
            column = (column << 1) | (adj[u] >> v & 1)
        columns.append(column)
    return columns


def labeled_key(graph: Graph) -> CanonicalKey:
    """Key identifying the labeled graph itself"""
    n = graph.vertex_count
    return _encode(LABELED_FLAG, n, _columns(graph.adjacency, range(n)))


def _are_twins(adj: Sequence[int], u: int, v: int) -> bool:
    return adj[u] & ~(1 << v) == adj[v] & ~(1 << u)


def _minimal_columns(graph: Graph) -> List[int]:
    n = graph.vertex_count
    adj = graph.adjacency
    degrees = [bin(mask).count("1") for mask in adj]
    slot_degrees = sorted(degrees, reverse=True)
    best: Optional[List[int]] = None
    columns: List[int] = []

    def search(unplaced: List[int], partial: List[int]) -> None:
        # partial[c] is the column c would contribute if placed next
        nonlocal best
        k = len(columns)
        if k == n:
            if best is None or columns < best:
                best = list(columns)
            return
        candidates = [c for c in unplaced if degrees[c] == slot_degrees[k]]
        low = min(partial[c] for c in candidates)
        if best is not None and columns + [low] > best[:k + 1]:
            return
        tied: List[int] = []
        for c in candidates:
            if partial[c] == low and not any(_are_twins(adj, c, t) for t in tied):
                tied.append(c)
        for c in tied:
            rest = [w for w in unplaced if w != c]
            shifted = list(partial)
            for w in rest:
                shifted[w] = (partial[w] << 1) | (adj[c] >> w & 1)
            columns.append(low)
            search(rest, shifted)
            columns.pop()

    search(list(range(n)), [0] * n)
    return best if best is not None else []


def canonical_key(graph: Graph, bound: int = 10) -> CanonicalKey:
    """Isomorphism-invariant key up to `bound` vertices, labeled key beyond"""
    if graph.vertex_count > bound:
        return labeled_key(graph)
    return _encode(CANONICAL_FLAG, graph.vertex_count, _minimal_columns(graph))
