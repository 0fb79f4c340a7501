"""
Exact chromatic polynomials by memoized deletion-contraction.

Importing this module raises the interpreter recursion limit to at least
RECURSION_LIMIT: addition chains on dense graphs recurse once per missing edge.
"""
import logging
import sys
from fractions import Fraction
from typing import Dict, Optional

from src.canonical import CanonicalKey, canonical_key
from src.config import EngineSettings, get_settings
from src.errors import InvariantViolation
from src.graph import Edge, Graph, add_edge, contract_edge, delete_edge, induced_subgraph, remove_vertex
from src.polynomial import (
    LAMBDA,
    ONE,
    Polynomial,
    evaluate,
    falling_factorial_poly,
    linear,
    poly_add,
    poly_mul,
    poly_power,
    poly_shift,
    poly_sub,
)

logger = logging.getLogger(__name__)

RECURSION_LIMIT = 20000

if sys.getrecursionlimit() < RECURSION_LIMIT:
    sys.setrecursionlimit(RECURSION_LIMIT)


def tree_polynomial(order: int) -> Polynomial:
    """λ(λ-1)^(order-1)"""
    return poly_mul(LAMBDA, poly_power(linear(1), order - 1))


class ChromaticEngine:
    """Deletion-contraction engine with a canonical-key memo table"""

    def __init__(self, settings: Optional[EngineSettings] = None, use_cache: bool = True):
        self.settings = settings or get_settings()
        self.use_cache = use_cache
        self._memo: Dict[CanonicalKey, Polynomial] = {}
        self._saturated = False
        self.calls = 0
        self.cache_hits = 0

    def polynomial(self, graph: Graph) -> Polynomial:
        return self._solve(graph)

    def clear_cache(self):
        self._memo.clear()
        self._saturated = False

    def get_statistics(self) -> Dict:
        return {
            'calls': self.calls,
            'cache_hits': self.cache_hits,
            'cache_size': len(self._memo),
            'cache_saturated': self._saturated,
        }

    def _solve(self, graph: Graph) -> Polynomial:
        self.calls += 1
        base = self._base_case(graph)
        if base is not None:
            return base

        key = None
        if self.use_cache:
            key = canonical_key(graph, self.settings.canonical_bound)
            cached = self._memo.get(key)
            if cached is not None:
                self.cache_hits += 1
                return cached

        result = self._reduce(graph)
        if key is not None:
            self._remember(key, result)
        return result

    def _remember(self, key: CanonicalKey, value: Polynomial):
        if len(self._memo) >= self.settings.cache_limit:
            if not self._saturated:
                logger.warning("memo table full at %d entries, continuing uncached", len(self._memo))
                self._saturated = True
            return
        self._memo[key] = value

    def _base_case(self, graph: Graph) -> Optional[Polynomial]:
        n = graph.vertex_count
        if n == 0:
            return ONE
        if graph.is_edgeless():
            return poly_power(LAMBDA, n)
        if graph.is_complete():
            return falling_factorial_poly(n)
        parts = graph.component_masks()
        if len(parts) > 1:
            result = ONE
            for mask in parts:
                members = [w for w in range(n) if mask >> w & 1]
                result = poly_mul(result, self._solve(induced_subgraph(graph, members)))
            return result
        if graph.edge_count == n - 1:
            return tree_polynomial(n)
        return None

    def _reduce(self, graph: Graph) -> Polynomial:
        n = graph.vertex_count
        adj = graph.adjacency
        full = (1 << n) - 1

        # simplicial vertex v of degree d: P(G) = (λ - d) P(G - v)
        for v in range(n):
            nbrs = adj[v]
            if all(nbrs & ~(adj[u] | (1 << u)) == 0 for u in range(n) if nbrs >> u & 1):
                d = bin(nbrs).count("1")
                return poly_mul(linear(d), self._solve(remove_vertex(graph, v)))

        # universal vertex v: P(G, λ) = λ P(G - v, λ - 1)
        for v in range(n):
            if adj[v] | (1 << v) == full:
                return poly_mul(LAMBDA, poly_shift(self._solve(remove_vertex(graph, v)), -1))

        if Fraction(graph.edge_count) > self.settings.density_threshold * graph.max_edges():
            u, v = self._pick(graph, graph.non_edges())
            # addition: P(G) = P(G + uv) + P(G / uv)
            return poly_add(self._solve(add_edge(graph, u, v)), self._solve(contract_edge(graph, u, v)))
        u, v = self._pick(graph, graph.sorted_edges())
        # deletion: P(G) = P(G - uv) - P(G / uv)
        return poly_sub(self._solve(delete_edge(graph, u, v)), self._solve(contract_edge(graph, u, v)))

    @staticmethod
    def _pick(graph: Graph, pairs) -> Edge:
        """Pair with the largest degree sum, smallest (u, v) on ties"""
        degrees = [graph.degree(w) for w in range(graph.vertex_count)]
        best = None
        best_sum = -1
        for u, v in pairs:
            total = degrees[u] + degrees[v]
            if total > best_sum:
                best, best_sum = (u, v), total
        return best


_default_engine: Optional[ChromaticEngine] = None


def default_engine() -> ChromaticEngine:
    global _default_engine
    if _default_engine is None:
        _default_engine = ChromaticEngine()
    return _default_engine


def chromatic_polynomial(graph: Graph, engine: Optional[ChromaticEngine] = None) -> Polynomial:
    """Chromatic polynomial P(G, λ); the empty graph gives the constant 1"""
    return (engine or default_engine()).polynomial(graph)


def chromatic_number(graph: Graph, engine: Optional[ChromaticEngine] = None) -> int:
    """Smallest λ >= 0 with at least one proper λ-colouring"""
    p = chromatic_polynomial(graph, engine)
    for value in range(graph.vertex_count + 1):
        if evaluate(p, value) > 0:
            return value
    raise InvariantViolation(f"no proper colouring with {graph.vertex_count} colours")
