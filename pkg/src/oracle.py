"""
Brute-force ground truth: enumerate legal b-fold λ-colourings one by one.

Nothing here uses a counting formula; the deletion-contraction engine and the
closed forms are all checked against these counts.
"""
import itertools
import math
from dataclasses import dataclass
from typing import FrozenSet, Iterable, List, Mapping, Optional, Sequence, Tuple

from src.config import get_settings
from src.errors import BudgetExceededError, ColoringError
from src.graph import Graph


@dataclass(frozen=True)
class Coloring:
    """Vertex v receives the colour set assignment[v]; every set has b colours from 1..palette"""
    assignment: Tuple[FrozenSet[int], ...]
    palette: int
    b: int

    def __post_init__(self):
        if self.b < 1:
            raise ColoringError(f"fold b must be positive, got {self.b}")
        for v, colors in enumerate(self.assignment):
            if len(colors) != self.b:
                raise ColoringError(f"vertex {v} has {len(colors)} colours, expected {self.b}")
            if any(not 1 <= c <= self.palette for c in colors):
                raise ColoringError(f"vertex {v} uses a colour outside 1..{self.palette}")

    @classmethod
    def from_sets(cls, sets: Sequence[Iterable[int]], palette: int) -> 'Coloring':
        """Infer b from the first set; an empty sequence colours the empty graph"""
        frozen = tuple(frozenset(s) for s in sets)
        b = len(frozen[0]) if frozen else 1
        return cls(frozen, palette, b)

    def permute_colors(self, mapping: Mapping[int, int]) -> 'Coloring':
        """Rename colours through a permutation of 1..palette"""
        if sorted(mapping) != list(range(1, self.palette + 1)) or sorted(mapping.values()) != sorted(mapping):
            raise ColoringError("colour renaming must permute the whole palette")
        return Coloring(tuple(frozenset(mapping[c] for c in s) for s in self.assignment), self.palette, self.b)


def color_subsets(palette: int, b: int) -> List[int]:
    """All b-subsets of 1..palette in lexicographic order, colour c stored as bit c-1"""
    return [sum(1 << (c - 1) for c in combo) for combo in itertools.combinations(range(1, palette + 1), b)]


def is_legal(graph: Graph, coloring: Coloring) -> bool:
    """Adjacent vertices must receive disjoint colour sets"""
    if len(coloring.assignment) != graph.vertex_count:
        raise ColoringError(
            f"colouring covers {len(coloring.assignment)} vertices, graph has {graph.vertex_count}"
        )
    return all(not coloring.assignment[u] & coloring.assignment[v] for u, v in graph.edges)


def candidate_count(graph: Graph, palette: int, b: int) -> int:
    """Size of the full assignment space C(λ, b)^|V|"""
    return math.comb(palette, b) ** graph.vertex_count


def enumerate_count(graph: Graph, palette: int, b: int, budget: Optional[int] = None) -> int:
    """
    Count legal b-fold colourings by backtracking over vertices in index order.

    A branch stops as soon as the newest vertex clashes with an earlier
    neighbour. Refuses with BudgetExceededError when C(λ, b)^|V| exceeds the
    budget instead of truncating.
    """
    if b < 1 or palette < 0:
        raise ColoringError(f"need b >= 1 and λ >= 0, got b={b}, λ={palette}")
    budget = get_settings().oracle_budget if budget is None else budget
    required = candidate_count(graph, palette, b)
    if required > budget:
        raise BudgetExceededError(required, budget)

    n = graph.vertex_count
    subsets = color_subsets(palette, b)
    earlier = [[u for u in graph.neighbors(v) if u < v] for v in range(n)]
    chosen = [0] * n

    def extend(v: int) -> int:
        if v == n:
            return 1
        total = 0
        for s in subsets:
            if all(not chosen[u] & s for u in earlier[v]):
                chosen[v] = s
                total += extend(v + 1)
        return total

    return extend(0)


def product_count(graph: Graph, palette: int, b: int) -> int:
    """Unpruned Cartesian-product enumeration; only for tiny instances"""
    subsets = color_subsets(palette, b)
    edges = graph.sorted_edges()
    return sum(1 for combo in itertools.product(subsets, repeat=graph.vertex_count)
               if all(not combo[u] & combo[v] for u, v in edges))


def enumerate_colorings(graph: Graph, palette: int, b: int) -> List[Coloring]:
    """Materialise every legal colouring (small instances, used by the blow-up checks)"""
    combos = list(itertools.combinations(range(1, palette + 1), b))
    found = []
    for choice in itertools.product(combos, repeat=graph.vertex_count):
        sets = tuple(frozenset(c) for c in choice)
        if all(not sets[u] & sets[v] for u, v in graph.edges):
            found.append(Coloring(sets, palette, b))
    return found



def find_coloring(graph: Graph, palette: int, b: int, budget: Optional[int] = None) -> Optional[Coloring]:
    """
    First legal b-fold colouring in backtracking order, or None.

    Every colour set tried at a vertex counts against the budget, so
    infeasible palettes cost the whole pruned tree while feasible ones
    usually stop early.
    """
    if b < 1 or palette < 0:
        raise ColoringError(f"need b >= 1 and λ >= 0, got b={b}, λ={palette}")
    budget = get_settings().oracle_budget if budget is None else budget
    n = graph.vertex_count
    subsets = color_subsets(palette, b)
    earlier = [[u for u in graph.neighbors(v) if u < v] for v in range(n)]
    chosen = [0] * n
    tried = 0

    def extend(v: int) -> bool:
        nonlocal tried
        if v == n:
            return True
        for s in subsets:
            tried += 1
            if tried > budget:
                raise BudgetExceededError(tried, budget)
            if all(not chosen[u] & s for u in earlier[v]):
                chosen[v] = s
                if extend(v + 1):
                    return True
        return False

    if not extend(0):
        return None
    sets = [frozenset(c + 1 for c in range(palette) if mask >> c & 1) for mask in chosen]
    return Coloring(tuple(sets), palette, b)


def smallest_palette(graph: Graph, b: int, budget: Optional[int] = None) -> int:
    """Smallest λ admitting a legal b-fold λ-colouring, by search alone; 0 for the empty graph"""
    if b < 1:
        raise ColoringError(f"fold b must be positive, got {b}")
    if graph.vertex_count == 0:
        return 0
    palette = b
    while find_coloring(graph, palette, b, budget) is None:
        palette += 1
    return palette
