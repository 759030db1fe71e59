import pytest

from conftest import path_graph
from rbsep.errors import FormatError
from rbsep.graphs import Coloring
from rbsep.io import (
    coloring_from_text,
    coloring_to_text,
    graph_from_text,
    graph_to_text,
    vertex_set_from_text,
    vertex_set_to_text,
)


def test_graph_round_trip_bit_exact():
    g = path_graph(4)
    text = graph_to_text(g)
    assert text == "4 3\n0 1\n1 2\n2 3\n"
    assert graph_to_text(graph_from_text(text)) == text


def test_graph_parse_errors_carry_line_numbers():
    with pytest.raises(FormatError) as exc:
        graph_from_text("2 1\n1 0\n")
    assert exc.value.line == 2
    with pytest.raises(FormatError) as exc:
        graph_from_text("2 2\n0 1\n")
    assert exc.value.line == 1
    with pytest.raises(FormatError):
        graph_from_text("x y\n")
    with pytest.raises(FormatError):
        graph_from_text("")


def test_coloring_round_trip():
    c = Coloring.from_string("RBRB")
    assert coloring_to_text(c) == "RBRB\n"
    assert coloring_from_text("RBRB\n").red_vertices() == (0, 2)
    with pytest.raises(FormatError):
        coloring_from_text("RBX\n")
    with pytest.raises(FormatError):
        coloring_from_text("RB\n", n=3)


def test_vertex_set_round_trip():
    assert vertex_set_to_text([3, 1, 2]) == "1 2 3\n"
    assert vertex_set_from_text("1 2 3\n") == (1, 2, 3)
    assert vertex_set_from_text("\n") == ()
    assert vertex_set_to_text([]) == "\n"
    with pytest.raises(FormatError):
        vertex_set_from_text("2 1\n")
    with pytest.raises(FormatError):
        vertex_set_from_text("1 a\n")
