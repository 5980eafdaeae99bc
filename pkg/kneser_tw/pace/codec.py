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
Codecs for the PACE .gr and .td text formats.

.gr::

    c optional comments
    p tw <#vertices> <#edges>
    <u> <v>                       one line per edge, 1-based, u < v, sorted

.td::

    c optional comments
    s td <#bags> <max-bag-size> <#vertices>
    b <bag-id> <v> ...            one line per bag, 1-based, vertices sorted
    <i> <j>                       one line per tree edge, i < j, sorted

Files are written with "\\n" line endings, so that equal objects give equal
bytes. Internally vertices and nodes are 0-based.
"""
import logging
from typing import Iterable, List, NamedTuple, Optional, Tuple

import networkx as nx

from kneser_tw.exceptions import ParseError
from kneser_tw.kneser import KneserGraph
from kneser_tw.tdecomp import TreeDecomposition
from kneser_tw.utils import GraphLike, KneserPath

logger = logging.getLogger(__name__)


class PaceDecomposition(NamedTuple):
    """
    Content of a .td file.
    """

    decomposition: TreeDecomposition
    num_vertices: int  #: Number of vertices of the decomposed graph.


def _comment_lines(comments: Iterable[str]) -> List[str]:
    return [f"c {comment}".rstrip() for comment in comments]


def format_gr(graph: GraphLike, comments: Iterable[str] = ()) -> str:
    """
    Args:
        graph (GraphLike): the graph, with vertices 0..N-1.
        comments (Iterable[str], optional): comment lines, without the "c ". Defaults to ().

    Returns:
        str: the .gr text.
    """
    edges = sorted((min(u, v), max(u, v)) for u, v in graph.edges())
    lines = _comment_lines(comments)
    lines.append(f"p tw {graph.number_of_nodes()} {len(edges)}")
    lines.extend(f"{u + 1} {v + 1}" for u, v in edges)
    return "\n".join(lines) + "\n"


def format_td(
    td: TreeDecomposition, num_vertices: int, comments: Iterable[str] = ()
) -> str:
    """
    Args:
        td (TreeDecomposition): the decomposition.
        num_vertices (int): number of vertices of the decomposed graph.
        comments (Iterable[str], optional): comment lines, without the "c ". Defaults to ().

    Returns:
        str: the .td text.
    """
    lines = _comment_lines(comments)
    lines.append(f"s td {td.num_nodes} {td.max_bag_size} {num_vertices}")
    for node, bag in enumerate(td.bags):
        lines.append(" ".join(["b", str(node + 1), *(str(v + 1) for v in bag)]))
    lines.extend(f"{i + 1} {j + 1}" for i, j in td.tree_edges)
    return "\n".join(lines) + "\n"


def _write(text: str, path: KneserPath) -> None:
    with open(path, "w", encoding="utf-8", newline="\n") as handle:
        handle.write(text)
    logger.info("File written at %s.", str(path))


def write_gr(graph: GraphLike, path: KneserPath, comments: Iterable[str] = ()) -> None:
    """
    Write graph as a .gr file.

    Args:
        graph (GraphLike): the graph.
        path (KneserPath): output path.
        comments (Iterable[str], optional): comment lines. Defaults to ().
    """
    _write(format_gr(graph, comments), path)


def write_td(
    td: TreeDecomposition, num_vertices: int, path: KneserPath, comments: Iterable[str] = ()
) -> None:
    """
    Write td as a .td file.

    Args:
        td (TreeDecomposition): the decomposition.
        num_vertices (int): number of vertices of the decomposed graph.
        path (KneserPath): output path.
        comments (Iterable[str], optional): comment lines. Defaults to ().
    """
    _write(format_td(td, num_vertices, comments), path)


def write_labels(graph: KneserGraph, path: KneserPath) -> None:
    """
    Write the table "<vertex> <subset>" of a Kneser graph, vertices 1-based.

    Args:
        graph (KneserGraph): the graph.
        path (KneserPath): output path.
    """
    lines = [f"{v + 1} {graph.vertex_subset(v)}" for v in range(graph.number_of_nodes())]
    _write("\n".join(lines) + "\n", path)


def _content_lines(text: str) -> Iterable[Tuple[int, List[str]]]:
    for line_number, line in enumerate(text.splitlines(), start=1):
        parts = line.split()
        if not parts or parts[0] == "c":
            continue
        yield line_number, parts


def _integers(parts: List[str], path: Optional[str], line_number: int) -> List[int]:
    try:
        return [int(part) for part in parts]
    except ValueError as exc:
        raise ParseError(f"expected integers, got {' '.join(parts)}", path, line_number) from exc


def parse_gr(text: str, path: Optional[str] = None) -> nx.Graph:
    """
    Parse the content of a .gr file.

    Args:
        text (str): the content.
        path (str, optional): file name for error messages. Defaults to None.

    Raises:
        ParseError: on a missing or repeated header, a malformed line, an
            out of range vertex, a self-loop or a wrong number of edges.

    Returns:
        nx.Graph: the graph, with vertices 0..N-1.
    """
    graph: Optional[nx.Graph] = None
    declared_edges = 0
    seen_edges = 0
    for line_number, parts in _content_lines(text):
        if parts[0] == "p":
            if graph is not None:
                raise ParseError("repeated header", path, line_number)
            if len(parts) != 4 or parts[1] != "tw":
                raise ParseError("header must be 'p tw <#vertices> <#edges>'", path, line_number)
            size, declared_edges = _integers(parts[2:], path, line_number)
            graph = nx.Graph()
            graph.add_nodes_from(range(size))
            continue
        if graph is None:
            raise ParseError("edge before the header", path, line_number)
        if len(parts) != 2:
            raise ParseError("edge lines must be '<u> <v>'", path, line_number)
        u, v = _integers(parts, path, line_number)
        size = graph.number_of_nodes()
        if not (1 <= u <= size and 1 <= v <= size):
            raise ParseError(f"vertex out of 1..{size}", path, line_number)
        if u == v:
            raise ParseError("self-loop", path, line_number)
        graph.add_edge(u - 1, v - 1)
        seen_edges += 1
    if graph is None:
        raise ParseError("missing header", path)
    if seen_edges != declared_edges or graph.number_of_edges() != declared_edges:
        raise ParseError(
            f"{declared_edges} edges declared, {seen_edges} found", path
        )
    return graph


def parse_td(text: str, path: Optional[str] = None) -> PaceDecomposition:
    """
    Parse the content of a .td file.

    The tree itself is not checked here: see
    :func:`kneser_tw.tdecomp.validate_decomposition`.

    Args:
        text (str): the content.
        path (str, optional): file name for error messages. Defaults to None.

    Raises:
        ParseError: on a missing or repeated header, a malformed line, a
            missing or repeated bag, an out of range vertex or node, or a
            wrong maximum bag size.

    Returns:
        PaceDecomposition: the decomposition and the number of vertices.
    """
    header: Optional[List[int]] = None
    bags: List[Optional[Tuple[int, ...]]] = []
    tree_edges = []
    for line_number, parts in _content_lines(text):
        if parts[0] == "s":
            if header is not None:
                raise ParseError("repeated header", path, line_number)
            if len(parts) != 5 or parts[1] != "td":
                raise ParseError(
                    "header must be 's td <#bags> <max-bag-size> <#vertices>'", path, line_number
                )
            header = _integers(parts[2:], path, line_number)
            bags = [None] * header[0]
            continue
        if header is None:
            raise ParseError("content before the header", path, line_number)
        num_bags, _, num_vertices = header
        if parts[0] == "b":
            values = _integers(parts[1:], path, line_number)
            if not values or not 1 <= values[0] <= num_bags:
                raise ParseError(f"bag id out of 1..{num_bags}", path, line_number)
            if bags[values[0] - 1] is not None:
                raise ParseError(f"repeated bag {values[0]}", path, line_number)
            if any(not 1 <= v <= num_vertices for v in values[1:]):
                raise ParseError(f"vertex out of 1..{num_vertices}", path, line_number)
            bags[values[0] - 1] = tuple(v - 1 for v in values[1:])
            continue
        if len(parts) != 2:
            raise ParseError("tree edge lines must be '<i> <j>'", path, line_number)
        i, j = _integers(parts, path, line_number)
        if not (1 <= i <= num_bags and 1 <= j <= num_bags):
            raise ParseError(f"node out of 1..{num_bags}", path, line_number)
        tree_edges.append((i - 1, j - 1))
    if header is None:
        raise ParseError("missing header", path)
    missing = [node + 1 for node, bag in enumerate(bags) if bag is None]
    if missing:
        raise ParseError(f"missing bags {missing}", path)
    td = TreeDecomposition.from_bags([bag or () for bag in bags], tree_edges)
    if td.max_bag_size != header[1]:
        raise ParseError(
            f"maximum bag size {header[1]} declared, {td.max_bag_size} found", path
        )
    return PaceDecomposition(td, header[2])


def read_gr(path: KneserPath) -> nx.Graph:
    """
    Read a .gr file.

    Args:
        path (KneserPath): the file.

    Raises:
        ParseError: if the file is malformed.

    Returns:
        nx.Graph: the graph.
    """
    with open(path, "r", encoding="utf-8") as handle:
        return parse_gr(handle.read(), str(path))


def read_td(path: KneserPath) -> PaceDecomposition:
    """
    Read a .td file.

    Args:
        path (KneserPath): the file.

    Raises:
        ParseError: if the file is malformed.

    Returns:
        PaceDecomposition: the decomposition and the number of vertices.
    """
    with open(path, "r", encoding="utf-8") as handle:
        return parse_td(handle.read(), str(path))
