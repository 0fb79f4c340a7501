"""
Test suite for the blow-up construction and colouring transfer
"""
import math

import pytest

from src.blowup import blow_up, blowup_pair, blowup_vertex, check_fold, collapse_coloring, lift_coloring
from src.fractional import complete_closed_form
from src.errors import ColoringError, GraphError
from src.generators import complete_graph, cycle_graph, path_graph, random_graph
from src.graph import Graph
from src.oracle import Coloring, enumerate_colorings


def test_sizes():
    for seed in range(10):
        g = random_graph(5, 0.5, seed=seed)
        for b in (1, 2, 3):
            blown = blow_up(g, b)
            assert blown.vertex_count == 5 * b
            assert blown.edge_count == 5 * math.comb(b, 2) + g.edge_count * b * b


def test_fold_one_is_identity():
    g = cycle_graph(5)
    assert blow_up(g, 1) == g


def test_complete_graphs_blow_up_to_complete_graphs():
    for n in range(1, 5):
        for b in range(1, 4):
            assert blow_up(complete_graph(n), b) == complete_graph(n * b)


def test_edge_blown_up_three_times():
    blown = blow_up(complete_graph(2), 3)
    assert (blown.vertex_count, blown.edge_count) == (6, 15)


def test_blocks_and_joins():
    blown = blow_up(path_graph(3), 2)
    assert blowup_vertex(1, 1, 2) == 3
    assert blown.has_edge(2, 3)  # inside the block of vertex 1
    assert blown.has_edge(*blowup_pair(0, 1, 0, 1, 2))
    assert not blown.has_edge(*blowup_pair(0, 2, 1, 0, 2))
    with pytest.raises(GraphError):
        blowup_vertex(0, 2, 2)


def test_fold_check_is_shared():
    """blow-up and b-fold counting reject a bad fold with the same error"""
    with pytest.raises(GraphError):
        check_fold(0)
    with pytest.raises(GraphError):
        complete_closed_form(2, 4, 0)
    with pytest.raises(GraphError):
        check_fold(1.5)


def test_invalid_fold():
    with pytest.raises(GraphError):
        blow_up(Graph(2), 0)


def test_lift_and_collapse_are_inverse():
    g = path_graph(3)
    b, palette = 2, 5
    blown = blow_up(g, b)
    colorings = enumerate_colorings(g, palette, b)
    assert len(colorings) == 90
    for coloring in colorings:
        lifted = lift_coloring(g, coloring)
        assert all(lifted[x] != lifted[y] for x, y in blown.edges), f"{coloring} did not lift to a proper colouring"
        assert collapse_coloring(g, lifted, b, palette) == coloring


def test_collapse_rejects_repeated_colours_in_a_block():
    with pytest.raises(ColoringError):
        collapse_coloring(Graph(1), [3, 3], 2, 4)
    with pytest.raises(ColoringError):
        collapse_coloring(Graph(2), [1, 2], 2, 4)
    with pytest.raises(ColoringError):
        lift_coloring(Graph(2), Coloring.from_sets([{1, 2}], 4))


if __name__ == "__main__":
    pytest.main([__file__, "-v"])
