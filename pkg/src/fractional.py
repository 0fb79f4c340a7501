"""
b-fold colouring counts: the blow-up scaling identity, closed forms for
complete graphs, trees and forests, b-fold chromatic numbers, and the
deletion-contraction recurrences in their naive and blown-up forms
"""
import logging
import math
from dataclasses import dataclass
from enum import Enum
from typing import Optional, Sequence, Tuple

from src.blowup import blow_up, blowup_pair, check_fold, lift_coloring
from src.chromatic import ChromaticEngine, chromatic_polynomial
from src.errors import BudgetExceededError, GraphError, InvariantViolation
from src.graph import Edge, Graph, add_edge, contract_edge, delete_edge, normalize_edge
from src.oracle import find_coloring, smallest_palette
from src.polynomial import Polynomial, evaluate

logger = logging.getLogger(__name__)


def binom(m: int, k: int) -> int:
    """
    C(m, k) as a count of k-subsets of an m-set: zero whenever m < k,
    negative m included (the signed polynomial extension would corrupt counts)
    """
    if k < 0:
        raise ValueError(f"binomial lower index must be nonnegative, got {k}")
    if m < k:
        return 0
    return math.comb(m, k)


def _exact_divide(value: int, denominator: int, context: str) -> int:
    quotient, remainder = divmod(value, denominator)
    if remainder:
        raise InvariantViolation(f"{context}: {value} is not divisible by {denominator}")
    return quotient


@dataclass(frozen=True)
class FractionalPolynomial:
    """P(G, λ, b) = numerator(λ) / (b!)^n with numerator = P(G^b, λ)"""
    numerator: Polynomial
    denominator: int
    b: int
    n: int

    def __post_init__(self):
        if self.denominator != math.factorial(self.b) ** self.n:
            raise InvariantViolation(
                f"denominator {self.denominator} differs from ({self.b}!)^{self.n}"
            )

    def evaluate(self, palette: int) -> int:
        return _exact_divide(evaluate(self.numerator, palette), self.denominator,
                             f"P(G, {palette}, {self.b}) numerator")

    def to_json(self) -> dict:
        return {
            **self.numerator.to_json(),
            "denominator": str(self.denominator),
            "b": self.b,
            "n": self.n,
        }


def fractional_polynomial(graph: Graph, b: int, engine: Optional[ChromaticEngine] = None) -> FractionalPolynomial:
    """Numerator P(G^b, λ) over (b!)^|V|"""
    check_fold(b)
    numerator = chromatic_polynomial(blow_up(graph, b), engine)
    return FractionalPolynomial(numerator, math.factorial(b) ** graph.vertex_count, b, graph.vertex_count)


def fractional_count(graph: Graph, palette: int, b: int, engine: Optional[ChromaticEngine] = None) -> int:
    """Number of distinct b-fold λ-colourings, via the numerator and an exact division"""
    return fractional_polynomial(graph, b, engine).evaluate(palette)


def complete_closed_form(n: int, palette: int, b: int) -> int:
    """P(K_n, λ, b) = prod_{j<n} C(λ - bj, b)"""
    check_fold(b)
    result = 1
    for j in range(n):
        result *= binom(palette - b * j, b)
    return result


def complete_falling_form(n: int, palette: int, b: int) -> int:
    """Same count before simplification: (λ)_{nb} / (b!)^n"""
    check_fold(b)
    falling = 1
    for j in range(n * b):
        falling *= palette - j
    return _exact_divide(falling, math.factorial(b) ** n, f"(λ)_{n * b} over ({b}!)^{n}")


def tree_closed_form(order: int, palette: int, b: int) -> int:
    """P(T, λ, b) = C(λ, b) C(λ - b, b)^(|V_T| - 1)"""
    check_fold(b)
    if order < 1:
        raise ValueError(f"tree order must be positive, got {order}")
    return binom(palette, b) * binom(palette - b, b) ** (order - 1)


def forest_closed_form(component_orders: Sequence[int], palette: int, b: int) -> int:
    """P(F, λ, b) = C(λ, b)^k C(λ - b, b)^(|V_F| - k) for k components"""
    check_fold(b)
    if any(order < 1 for order in component_orders):
        raise ValueError(f"component orders must be positive, got {list(component_orders)}")
    k = len(component_orders)
    return binom(palette, b) ** k * binom(palette - b, b) ** (sum(component_orders) - k)


def b_fold_chromatic_number(graph: Graph, b: int, engine: Optional[ChromaticEngine] = None,
                            budget: Optional[int] = None) -> int:
    """
    Smallest λ admitting a b-fold λ-colouring, read off the counting polynomial
    and cross-checked against a direct backtracking search when that fits the
    oracle budget. The search witness, lifted to G^b, must be a proper colouring.
    """
    check_fold(b)
    if graph.vertex_count == 0:
        return 0
    frac = fractional_polynomial(graph, b, engine)
    found = next((palette for palette in range(b, graph.vertex_count * b + 1) if frac.evaluate(palette) > 0), None)
    if found is None:
        raise InvariantViolation(f"counting polynomial admits no b-fold colouring with {graph.vertex_count * b} colours")
    try:
        searched = smallest_palette(graph, b, budget)
        witness = find_coloring(graph, searched, b, budget)
    except BudgetExceededError as e:
        logger.info("b-fold chromatic number of %r at b=%d not searched: %s", graph, b, e)
        return found
    if found != searched:
        raise InvariantViolation(f"counting polynomial gives chi_{b} = {found}, search gives {searched}")
    lifted = lift_coloring(graph, witness)
    if any(lifted[x] == lifted[y] for x, y in blow_up(graph, b).edges):
        raise InvariantViolation(f"search witness for chi_{b} does not lift to a proper colouring of G^{b}")
    return found


class FrtMode(Enum):
    DELETION = "deletion"  # P(G) = P(G - uv) - P(G / uv), uv an edge
    ADDITION = "addition"  # P(G) = P(G + uv) + P(G / uv), uv a non-edge


@dataclass(frozen=True)
class NaiveFrtReport:
    lhs: int
    rhs: int
    holds: bool
    mode: FrtMode


def naive_frt_check(graph: Graph, edge: Edge, palette: int, b: int,
                    mode: FrtMode = FrtMode.DELETION,
                    engine: Optional[ChromaticEngine] = None) -> NaiveFrtReport:
    """Apply the ordinary recurrence directly to b-fold counts and report whether it balances"""
    u, v = edge
    lhs = fractional_count(graph, palette, b, engine)
    merged = fractional_count(contract_edge(graph, u, v), palette, b, engine)
    if mode is FrtMode.DELETION:
        rhs = fractional_count(delete_edge(graph, u, v), palette, b, engine) - merged
    else:
        rhs = fractional_count(add_edge(graph, u, v), palette, b, engine) + merged
    return NaiveFrtReport(lhs, rhs, lhs == rhs, mode)


def generalized_frt_count(graph: Graph, b: int, palette: int, blowup_edge: Edge,
                          mode: FrtMode = FrtMode.DELETION,
                          engine: Optional[ChromaticEngine] = None) -> int:
    """
    Run the ordinary recurrence on G^b around blowup_edge (blow-up coordinates),
    then divide by (b!)^|V|
    """
    check_fold(b)
    blown = blow_up(graph, b)
    u, v = blowup_edge
    if mode is FrtMode.DELETION:
        if not blown.has_edge(u, v):
            raise GraphError(f"{normalize_edge(u, v)} is not an edge of G^{b}")
        first = evaluate(chromatic_polynomial(delete_edge(blown, u, v), engine), palette)
        second = evaluate(chromatic_polynomial(contract_edge(blown, u, v), engine), palette)
        total = first - second
    else:
        if u == v or blown.has_edge(u, v):
            raise GraphError(f"{normalize_edge(u, v)} is not a non-adjacent pair of G^{b}")
        first = evaluate(chromatic_polynomial(add_edge(blown, u, v), engine), palette)
        second = evaluate(chromatic_polynomial(contract_edge(blown, u, v), engine), palette)
        total = first + second
    return _exact_divide(total, math.factorial(b) ** graph.vertex_count, f"{mode.value} recurrence on G^{b}")


def reduced_triangle_identity(palette: int, b: int) -> Tuple[int, int]:
    """
    Both sides of the naive deletion recurrence on K_3 after dividing out
    C(λ, b) C(λ - b, b): (C(λ - 2b, b), C(λ - b, b) - 1). They agree for
    every λ >= 2 when b = 1; b = 2, λ = 6 gives (1, 5).
    """
    check_fold(b)
    return binom(palette - 2 * b, b), binom(palette - b, b) - 1


@dataclass(frozen=True)
class FrtReport:
    mode: FrtMode
    edge: Edge
    blowup_edge: Edge
    lhs: int
    naive_rhs: int
    naive_holds: bool
    generalized_rhs: int
    generalized_holds: bool

    def to_json(self) -> dict:
        return {
            "mode": self.mode.value,
            "edge": list(self.edge),
            "blowup_edge": list(self.blowup_edge),
            "lhs": str(self.lhs),
            "naive_rhs": str(self.naive_rhs),
            "naive_holds": self.naive_holds,
            "generalized_rhs": str(self.generalized_rhs),
            "generalized_holds": self.generalized_holds,
        }


def frt_report(graph: Graph, edge: Edge, palette: int, b: int,
               engine: Optional[ChromaticEngine] = None) -> FrtReport:
    """
    Compare the naive and the blown-up recurrence on one pair: deletion form
    for an edge of G, addition form for a non-adjacent pair. The blown-up
    surgery uses the first copies (u*b, v*b).
    """
    u, v = edge
    if u == v:
        raise GraphError(f"pair ({u}, {v}) needs two distinct vertices")
    mode = FrtMode.DELETION if graph.has_edge(u, v) else FrtMode.ADDITION
    naive = naive_frt_check(graph, (u, v), palette, b, mode, engine)
    blown_pair = blowup_pair(u, v, 0, 0, b)
    generalized = generalized_frt_count(graph, b, palette, blown_pair, mode, engine)
    return FrtReport(
        mode=mode,
        edge=normalize_edge(u, v),
        blowup_edge=blown_pair,
        lhs=naive.lhs,
        naive_rhs=naive.rhs,
        naive_holds=naive.holds,
        generalized_rhs=generalized,
        generalized_holds=generalized == naive.lhs,
    )
