"""
Test suite for the edge-list and DIMACS readers and writers
"""
import logging

import pytest

from src.errors import GraphParseError
from src.generators import random_graph
from src.graph import make_graph
from src.graph_io import (
    GraphFormat,
    detect_format,
    parse_dimacs,
    parse_edge_list,
    parse_graph,
    read_graph,
    serialize_dimacs,
    serialize_edge_list,
    serialize_graph,
)

PATH3 = make_graph(3, [(0, 1), (1, 2)])


def test_edge_list_with_comments_and_duplicates():
    text = "# a path\nn 3\n0 1  # first\n\n1 2\n2 1\n"
    assert parse_edge_list(text) == PATH3


def test_edge_list_isolated_vertices():
    assert parse_edge_list("n 4\n").vertex_count == 4


def test_edge_list_errors_carry_line_numbers():
    with pytest.raises(GraphParseError) as exc:
        parse_edge_list("0 1\n")
    assert exc.value.line_number == 1

    with pytest.raises(GraphParseError) as exc:
        parse_edge_list("n 3\n0 1\n0 5\n")
    assert exc.value.line_number == 3
    assert "line 3" in str(exc.value)

    with pytest.raises(GraphParseError):
        parse_edge_list("n 3\n1 1\n")
    with pytest.raises(GraphParseError):
        parse_edge_list("n 3\nn 3\n")
    with pytest.raises(GraphParseError):
        parse_edge_list("n x\n")
    with pytest.raises(GraphParseError):
        parse_edge_list("")


def test_dimacs_is_one_based():
    text = "c a path\np edge 3 2\ne 1 2\ne 2 3\n"
    assert parse_dimacs(text) == PATH3


def test_dimacs_duplicate_edge_warns(caplog):
    with caplog.at_level(logging.WARNING):
        g = parse_dimacs("p edge 2 2\ne 1 2\ne 2 1\n")
    assert g.edge_count == 1
    assert "duplicate edge" in caplog.text


def test_dimacs_errors():
    with pytest.raises(GraphParseError):
        parse_dimacs("e 1 2\n")
    with pytest.raises(GraphParseError):
        parse_dimacs("p edge 2 1\nx 1 2\n")
    with pytest.raises(GraphParseError):
        parse_dimacs("p col 2 1\ne 1 2\n")
    with pytest.raises(GraphParseError):
        parse_dimacs("p edge 2 1\ne 1 3\n")
    with pytest.raises(GraphParseError):
        parse_dimacs("p edge 2 1\ne 1 1\n")


def test_serializers():
    assert serialize_edge_list(PATH3) == "n 3\n0 1\n1 2\n"
    assert serialize_dimacs(PATH3) == "p edge 3 2\ne 1 2\ne 2 3\n"


def test_random_graphs_survive_both_formats():
    for seed in range(10):
        g = random_graph(3 + seed, 0.4, seed=seed)
        assert parse_edge_list(serialize_edge_list(g)) == g
        assert parse_dimacs(serialize_dimacs(g)) == g
        assert parse_graph(serialize_graph(g, GraphFormat.DIMACS)) == g


def test_format_detection():
    assert detect_format("c comment\np edge 1 0\n") is GraphFormat.DIMACS
    assert detect_format("# comment\nn 2\n0 1\n") is GraphFormat.EDGELIST
    assert parse_graph(serialize_dimacs(PATH3)) == PATH3
    assert parse_graph(serialize_edge_list(PATH3), GraphFormat.EDGELIST) == PATH3


def test_read_graph_from_file(tmp_path):
    path = tmp_path / "path.col"
    path.write_text(serialize_dimacs(PATH3), encoding="utf-8")
    assert read_graph(str(path)) == PATH3


if __name__ == "__main__":
    pytest.main([__file__, "-v"])
