"""
Simple console walkthrough: why deletion-contraction breaks for b-fold
colourings and how running it on the blow-up repairs it
"""
import sys
import os

# Add repo root to path
sys.path.insert(0, os.path.join(os.path.dirname(__file__), '..'))

from src.blowup import blow_up
from src.chromatic import ChromaticEngine
from src.fractional import (
    FrtMode,
    complete_closed_form,
    fractional_count,
    generalized_frt_count,
    naive_frt_check,
    reduced_triangle_identity,
)
from src.generators import complete_graph, cycle_graph
from src.oracle import Coloring, enumerate_count, is_legal


def main():
    print("=" * 70)
    print("B-FOLD CHROMATIC POLYNOMIALS - CONSOLE DEMO")
    print("=" * 70)
    print()

    engine = ChromaticEngine()
    triangle = complete_graph(3)
    palette, b = 6, 2

    print(f"🔺 Triangle K3, λ={palette}, b={b}")
    direct = fractional_count(triangle, palette, b, engine)
    print(f"  P(K3, {palette}, {b}) via blow-up     = {direct}")
    print(f"  closed form C(6,2) C(4,2) C(2,2) = {complete_closed_form(3, palette, b)}")
    print(f"  brute force                      = {enumerate_count(triangle, palette, b)}")
    print()

    report = naive_frt_check(triangle, (0, 1), palette, b, engine=engine)
    print("📉 Naive recurrence P(G) = P(G - uv) - P(G / uv) on b-fold counts:")
    print(f"  lhs = {report.lhs}, rhs = {report.rhs}  ->  {'OK' if report.holds else 'FAIL'}")
    left, right = reduced_triangle_identity(palette, b)
    print(f"  after dividing out C(λ,b) C(λ-b,b): {left} vs {right}")
    print()

    print(f"📈 Same recurrence on the blow-up K3^{b} (= K{3 * b}), every edge:")
    for pair in blow_up(triangle, b).sorted_edges():
        value = generalized_frt_count(triangle, b, palette, pair, FrtMode.DELETION, engine)
        status = "[OK]" if value == direct else "[XX]"
        print(f"  {status} edge {pair}: {value}")
    print()

    pentagon = cycle_graph(5)
    coloring = Coloring.from_sets([{1, 2}, {3, 4}, {2, 5}, {1, 4}, {3, 5}], 5)
    print("⭐ 2-fold 5-colouring of C5:", [sorted(s) for s in coloring.assignment])
    print(f"  legal: {is_legal(pentagon, coloring)}")
    print(f"  P(C5, 5, 2) = {fractional_count(pentagon, 5, 2, engine)}")
    print()

    stats = engine.get_statistics()
    print(f"Engine: {stats['calls']} calls, {stats['cache_hits']} cache hits, {stats['cache_size']} memo entries")
    print("=" * 70)


if __name__ == "__main__":
    main()
