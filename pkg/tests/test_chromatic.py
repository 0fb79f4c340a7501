"""
Test suite for the deletion-contraction engine
"""
import logging
import sys

import networkx as nx
import pytest
import sympy

from src.chromatic import RECURSION_LIMIT, ChromaticEngine, chromatic_number, chromatic_polynomial, tree_polynomial
from src.config import EngineSettings
from src.generators import (
    complete_graph,
    connected_graphs,
    cycle_graph,
    edgeless_graph,
    path_graph,
    random_graph,
    random_tree,
)
from src.graph import Graph, add_edge, contract_edge, delete_edge, disjoint_union
from src.oracle import enumerate_count
from src.polynomial import ONE, Polynomial, falling_factorial_poly, linear, poly_power, poly_sub


def sympy_reference(graph):
    """Helper: networkx's own chromatic polynomial as ascending integer coefficients"""
    expr = nx.chromatic_polynomial(graph.to_networkx())
    coeffs = sympy.Poly(expr, sympy.Symbol("x")).all_coeffs()
    return Polynomial(tuple(int(c) for c in reversed(coeffs)))


def test_base_cases():
    engine = ChromaticEngine()
    assert chromatic_polynomial(Graph(0), engine) == ONE
    assert chromatic_polynomial(edgeless_graph(4), engine) == Polynomial((0, 0, 0, 0, 1))
    for n in range(1, 7):
        assert chromatic_polynomial(complete_graph(n), engine) == falling_factorial_poly(n)
        assert chromatic_polynomial(random_tree(n, seed=n), engine) == tree_polynomial(n)


def test_cycles():
    """P(C_n) = (λ-1)^n + (-1)^n (λ-1)"""
    for n in range(3, 10):
        expected = poly_power(linear(1), n)
        expected = expected + linear(1) if n % 2 == 0 else poly_sub(expected, linear(1))
        assert chromatic_polynomial(cycle_graph(n)) == expected


def test_matches_networkx_on_every_small_shape():
    engine = ChromaticEngine()
    for g in connected_graphs(5):
        assert chromatic_polynomial(g, engine) == sympy_reference(g), f"mismatch on {g}"


def test_matches_oracle_on_small_graphs():
    engine = ChromaticEngine()
    for g in connected_graphs(5):
        p = chromatic_polynomial(g, engine)
        for palette in range(6):
            assert p(palette) == enumerate_count(g, palette, 1), f"{g} at λ={palette}"


def test_disjoint_union_multiplies():
    a, b = cycle_graph(5), random_tree(4, seed=2)
    assert chromatic_polynomial(disjoint_union([a, b])) == chromatic_polynomial(a) * chromatic_polynomial(b)


def test_counts_grow_with_palette():
    for seed in range(10):
        p = chromatic_polynomial(random_graph(6, 0.5, seed=seed))
        values = [p(palette) for palette in range(10)]
        assert values == sorted(values)


def test_petersen_graph_has_120_three_colourings():
    petersen = Graph.from_networkx(nx.petersen_graph())
    p = chromatic_polynomial(petersen)
    assert p.degree == 10
    assert p(3) == 120
    assert chromatic_number(petersen) == 3


def test_structural_coefficients():
    """Leading 1, next -|E|, alternating signs, zero constant term"""
    for seed in range(20):
        g = random_graph(7, 0.5, seed=seed)
        p = chromatic_polynomial(g)
        assert p.degree == 7
        assert p.leading == 1
        assert p.coefficient(6) == -g.edge_count
        assert p.coefficient(0) == 0
        for k, c in enumerate(p.coeffs):
            assert c == 0 or (c > 0) == ((7 - k) % 2 == 0)


def test_both_recurrences_hold():
    engine = ChromaticEngine()
    for seed in range(15):
        g = random_graph(6, 0.5, seed=seed)
        p = chromatic_polynomial(g, engine)
        for u, v in g.sorted_edges():
            assert p == poly_sub(chromatic_polynomial(delete_edge(g, u, v), engine),
                                 chromatic_polynomial(contract_edge(g, u, v), engine))
        for u, v in g.non_edges():
            assert p == chromatic_polynomial(add_edge(g, u, v), engine) + \
                chromatic_polynomial(contract_edge(g, u, v), engine)


def test_cache_does_not_change_results():
    cached = ChromaticEngine()
    uncached = ChromaticEngine(use_cache=False)
    for seed in range(10):
        g = random_graph(8, 0.4, seed=seed)
        assert cached.polynomial(g) == uncached.polynomial(g)
    stats = cached.get_statistics()
    assert stats['cache_hits'] > 0
    assert uncached.get_statistics()['cache_size'] == 0


def test_settings_do_not_change_results():
    g = random_graph(8, 0.55, seed=11)
    expected = ChromaticEngine().polynomial(g)
    for settings in (EngineSettings(canonical_bound=0),
                     EngineSettings(density_threshold=0),
                     EngineSettings(density_threshold=1)):
        assert ChromaticEngine(settings).polynomial(g) == expected


def test_full_cache_warns_once_and_keeps_going(caplog):
    engine = ChromaticEngine(EngineSettings(cache_limit=1))
    with caplog.at_level(logging.WARNING):
        p = engine.polynomial(cycle_graph(8))
    assert p == ChromaticEngine().polynomial(cycle_graph(8))
    assert engine.get_statistics()['cache_saturated']
    assert caplog.text.count("memo table full") == 1
    engine.clear_cache()
    assert engine.get_statistics()['cache_size'] == 0


def test_import_leaves_room_for_deep_recursion():
    assert sys.getrecursionlimit() >= RECURSION_LIMIT


def test_chromatic_number():
    assert chromatic_number(Graph(0)) == 0
    assert chromatic_number(edgeless_graph(3)) == 1
    assert chromatic_number(path_graph(4)) == 2
    assert chromatic_number(cycle_graph(5)) == 3
    assert chromatic_number(complete_graph(4)) == 4


if __name__ == "__main__":
    pytest.main([__file__, "-v"])
