# kneser-tw - Treewidth of generalized Kneser graphs with exact certificates.
# Copyright (C) 2026 The kneser-tw developers

# This program is free software: you can redistribute it and/or modify
# it under the terms of the GNU General Public License as published by
# the Free Software Foundation, either version 3 of the License, or
# (at your option) any later version.

# This program is distributed in the hope that it will be useful,
# but WITHOUT ANY WARRANTY; without even the implied warranty of
# MERCHANTABILITY or FITNESS FOR A PARTICULAR PURPOSE.  See the
# GNU General Public License for more details.

# You should have received a copy of the GNU General Public License
# along with this program.  If not, see <https://www.gnu.org/licenses/>.

"""
Tests of the .gr and .td codecs.
"""
import networkx as nx
import pytest
from hypothesis import given

from kneser_tw.exceptions import ParseError
from kneser_tw.pace import (
    format_gr,
    format_td,
    parse_gr,
    parse_td,
    read_gr,
    read_td,
    write_gr,
    write_labels,
    write_td,
)
from kneser_tw.tdecomp import TreeDecomposition, star_decomposition, validate_decomposition
from tests.strategies import small_graphs


def test_format_gr_petersen(petersen):
    text = format_gr(petersen, ["K(5,2,1)"])
    lines = text.splitlines()
    assert lines[0] == "c K(5,2,1)"
    assert lines[1] == "p tw 10 15"
    assert lines[2:5] == ["1 6", "1 9", "1 10"]
    assert len(lines) == 17
    assert text.endswith("\n")


def test_format_gr_kneser_632(kneser_632):
    assert format_gr(kneser_632).splitlines()[0] == "p tw 20 100"


def test_parse_gr_petersen(petersen):
    graph = parse_gr(format_gr(petersen, ["a comment"]))
    assert nx.is_isomorphic(graph, nx.petersen_graph())
    assert sorted(graph.edges()) == sorted(petersen.edges())


@given(small_graphs())
def test_gr_text_is_canonical(graph):
    text = format_gr(graph)
    assert format_gr(parse_gr(text)) == text


def test_parse_gr_isolated_vertices():
    graph = parse_gr("p tw 4 1\n1 2\n")
    assert graph.number_of_nodes() == 4
    assert list(graph.edges()) == [(0, 1)]


@pytest.mark.parametrize(
    "text, message",
    [
        ("1 2\n", "edge before the header"),
        ("c nothing\n", "missing header"),
        ("p tw 3 1\np tw 3 1\n1 2\n", "repeated header"),
        ("p td 3 1\n1 2\n", "header must be"),
        ("p tw 3 1\n1 4\n", "vertex out of 1..3"),
        ("p tw 3 1\n2 2\n", "self-loop"),
        ("p tw 3 2\n1 2\n", "2 edges declared, 1 found"),
        ("p tw 3 2\n1 2\n2 1\n", "2 edges declared"),
        ("p tw 3 1\n1 x\n", "expected integers"),
        ("p tw 3 1\n1 2 3\n", "edge lines must be"),
    ],
)
def test_parse_gr_errors(text, message):
    with pytest.raises(ParseError) as info:
        parse_gr(text, "graph.gr")
    assert message in str(info.value)
    assert str(info.value).startswith("graph.gr")


def test_parse_gr_error_line_number():
    with pytest.raises(ParseError) as info:
        parse_gr("c header follows\np tw 3 1\n\n1 5\n")
    assert info.value.line_number == 4


def test_format_td_star(petersen):
    td = star_decomposition(petersen, [0, 1, 3, 6])
    text = format_td(td, 10, ["star"])
    lines = text.splitlines()
    assert lines[0] == "c star"
    assert lines[1] == "s td 5 6 10"
    assert lines[2] == "b 1 3 5 6 8 9 10"
    assert lines[-4:] == ["1 2", "1 3", "1 4", "1 5"]


def test_parse_td_star(petersen):
    td = star_decomposition(petersen, [0, 1, 3, 6])
    parsed = parse_td(format_td(td, 10))
    assert parsed.num_vertices == 10
    assert parsed.decomposition == td
    assert validate_decomposition(petersen, parsed.decomposition).width == 5


def test_parse_td_unordered_bags():
    parsed = parse_td("s td 2 2 3\nb 2 3 2\nb 1 1 2\n1 2\n")
    assert parsed.decomposition == TreeDecomposition(((0, 1), (1, 2)), ((0, 1),))


def test_parse_td_empty_bag():
    parsed = parse_td("s td 1 0 0\nb 1\n")
    assert parsed.decomposition.bags == ((),)


@pytest.mark.parametrize(
    "text, message",
    [
        ("b 1 1\n", "content before the header"),
        ("", "missing header"),
        ("s td 1 1 1\ns td 1 1 1\nb 1 1\n", "repeated header"),
        ("s tw 1 1 1\nb 1 1\n", "header must be"),
        ("s td 1 1 1\nb 2 1\n", "bag id out of 1..1"),
        ("s td 2 1 1\nb 1 1\nb 1 1\n", "repeated bag 1"),
        ("s td 1 1 1\nb 1 2\n", "vertex out of 1..1"),
        ("s td 2 1 2\nb 1 1\n", "missing bags [2]"),
        ("s td 2 1 2\nb 1 1\nb 2 2\n1 3\n", "node out of 1..2"),
        ("s td 1 2 1\nb 1 1\n", "maximum bag size 2 declared, 1 found"),
        ("s td 2 1 2\nb 1 1\nb 2 2\n1\n", "tree edge lines must be"),
    ],
)
def test_parse_td_errors(text, message):
    with pytest.raises(ParseError) as info:
        parse_td(text)
    assert message in str(info.value)


def test_parse_td_does_not_check_the_tree():
    parsed = parse_td("s td 2 1 2\nb 1 1\nb 2 2\n")
    assert parsed.decomposition.tree_edges == ()


def test_files(tmp_path, petersen):
    gr_path = tmp_path / "petersen.gr"
    td_path = tmp_path / "petersen.td"
    td = star_decomposition(petersen, [0, 1, 3, 6])
    write_gr(petersen, gr_path, ["K(5,2,1)"])
    write_td(td, 10, td_path)
    assert b"\r" not in gr_path.read_bytes()
    graph = read_gr(gr_path)
    parsed = read_td(td_path)
    assert validate_decomposition(graph, parsed.decomposition).valid


def test_read_gr_reports_path(tmp_path):
    path = tmp_path / "broken.gr"
    path.write_text("p tw 2 1\n", encoding="utf-8")
    with pytest.raises(ParseError) as info:
        read_gr(path)
    assert info.value.path == str(path)


def test_write_labels(tmp_path, petersen):
    path = tmp_path / "petersen.labels"
    write_labels(petersen, path)
    lines = path.read_text(encoding="utf-8").splitlines()
    assert len(lines) == 10
    assert lines[0] == "1 {1,2}"
    assert lines[5] == "6 {3,4}"
    assert lines[9] == "10 {4,5}"
