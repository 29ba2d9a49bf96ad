import pytest

from orientflip.errors import ParseError
from orientflip.formats import format_graph, format_orientation, parse_graph, parse_orientation
from orientflip.multigraph import Orientation, complete_graph, duplicate


def test_round_trip():
    G = duplicate(complete_graph(4), 2)
    assert parse_graph(format_graph(G)) == G
    D = Orientation(G, 0b101100110011)
    assert parse_orientation(format_orientation(D), G) == D


def test_comments_and_whitespace():
    G = parse_graph("# triangle\n3 3\n0 1\n\n1 2\n# last\n2 0\n")
    assert G.edges == ((0, 1), (1, 2), (2, 0))
    assert parse_orientation("01 \n 1\n", G).bits() == "011"


@pytest.mark.parametrize("text", ["", "3\n", "3 2\n0 1\n", "3 1\n0 0\n", "2 1\n0 5\n", "2 1\na b\n"])
def test_bad_graphs(text):
    with pytest.raises(ParseError):
        parse_graph(text)


@pytest.mark.parametrize("text", ["01", "0102", "0121"])
def test_bad_orientations(text):
    with pytest.raises(ParseError):
        parse_orientation(text, parse_graph("3 3\n0 1\n1 2\n2 0\n"))
