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
Utils module for kneser-tw.
"""
from fractions import Fraction
from os import PathLike
from typing import Iterable, Iterator, List, Protocol, Tuple, Union, runtime_checkable

# Define custom types here
KneserPath = Union[str, PathLike]
Edge = Tuple[int, int]


@runtime_checkable
class GraphLike(Protocol):
    """
    Minimal graph interface used by the algorithms of kneser-tw.

    Vertices are the integers 0..N-1. Both :class:`networkx.Graph` (with
    such labels) and :class:`kneser_tw.kneser.KneserGraph` satisfy it.
    """

    def number_of_nodes(self) -> int:
        """Number of vertices."""

    def neighbors(self, v: int) -> Iterator[int]:
        """Neighbours of v."""

    def edges(self) -> Iterable[Edge]:
        """Edges of the graph."""

    def has_edge(self, u: int, v: int) -> bool:
        """True if {u, v} is an edge."""


def iter_bits(mask: int) -> Iterator[int]:
    """
    Iterate over the positions of the set bits of mask, in increasing order.

    Args:
        mask (int): the bitmask.

    Yields:
        int: positions of the set bits.
    """
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def mask_of(vertices: Iterable[int]) -> int:
    """
    Bitmask with the bits of vertices set.

    Args:
        vertices (Iterable[int]): vertex indices.

    Returns:
        int: the bitmask.
    """
    mask = 0
    for v in vertices:
        mask |= 1 << v
    return mask


def neighbor_masks(graph: GraphLike) -> List[int]:
    """
    Adjacency of the graph as one bitmask per vertex.

    Args:
        graph (GraphLike): the graph.

    Raises:
        ValueError: if the graph is not labelled by 0..N-1 or has a self-loop.

    Returns:
        List[int]: masks[v] has bit u set iff {u, v} is an edge.
    """
    size = graph.number_of_nodes()
    nodes = getattr(graph, "nodes", None)
    if nodes is not None:
        unexpected = [node for node in nodes if node not in range(size)]
        if unexpected:
            raise ValueError(
                f"Vertices must be labelled by 0..{size - 1} (found {unexpected!r})."
            )
    masks = [0] * size
    for v in range(size):
        for u in graph.neighbors(v):
            if not isinstance(u, int) or not 0 <= u < size:
                raise ValueError(
                    f"Vertices must be labelled by 0..{size - 1} (found {u!r})."
                )
            if u == v:
                raise ValueError(f"Self-loop on vertex {v}.")
            masks[v] |= 1 << u
    return masks


def parse_range(text: str) -> range:
    """
    Parse an inclusive range given as "a..b" or as a single integer "a".

    Args:
        text (str): the range.

    Raises:
        ValueError: if the text is not a valid range.

    Returns:
        range: the corresponding python range (b included).
    """
    if ".." in text:
        start_str, stop_str = text.split("..", 1)
        start, stop = int(start_str), int(stop_str)
    else:
        start = stop = int(text)
    if stop < start:
        raise ValueError(f"Empty range {text}.")
    return range(start, stop + 1)


def format_range(values: range) -> str:
    """
    Inverse of :func:`parse_range`.

    Args:
        values (range): a range with step 1.

    Returns:
        str: "a..b".
    """
    return f"{values.start}..{values.stop - 1}"


def parse_rational(text: Union[str, int, Fraction]) -> Fraction:
    """
    Parse an exact rational, given as "num/den", an integer or a Fraction.

    Floats are refused: every threshold of kneser-tw is exact.

    Args:
        text (Union[str, int, Fraction]): the value.

    Raises:
        ValueError: if the value is a float or is not a rational.

    Returns:
        Fraction: the rational.
    """
    if isinstance(text, float):
        raise ValueError(f"Floats are not accepted as exact rationals ({text}).")
    if isinstance(text, str) and ("." in text or "e" in text.lower()):
        raise ValueError(f"{text} is not written as an integer or num/den.")
    return Fraction(text)
