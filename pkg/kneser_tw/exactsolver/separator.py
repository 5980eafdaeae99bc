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
Balanced separators.

A p-separator of a graph is a vertex set X such that every component of the
graph minus X has at most p |V - X| vertices, for 2/3 <= p < 1. Small graphs
are searched exhaustively for a smallest one.
"""
import logging
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Any, Dict, Iterable, List, Tuple, Union

from kneser_tw.exceptions import CapExceeded, OutOfRange
from kneser_tw.utils import GraphLike, mask_of, neighbor_masks

logger = logging.getLogger(__name__)

DEFAULT_SEPARATOR_MAX_VERTICES = 20  #: Default cap of the exhaustive search.
MIN_P = Fraction(2, 3)  #: Smallest allowed balance.


def check_p(p: Union[Fraction, int, str]) -> Fraction:
    """
    Args:
        p (Union[Fraction, int, str]): the balance.

    Raises:
        OutOfRange: if p is not in [2/3, 1).

    Returns:
        Fraction: p as a fraction.
    """
    value = Fraction(p)
    if not MIN_P <= value < 1:
        raise OutOfRange("p", value, "[2/3, 1)")
    return value


def component_sizes(masks: List[int], alive: int) -> List[int]:
    """
    Sizes of the connected components of the subgraph induced by alive.

    Args:
        masks (List[int]): neighbour bitmasks.
        alive (int): bitmask of the kept vertices.

    Returns:
        List[int]: component sizes, in order of smallest vertex.
    """
    sizes = []
    while alive:
        component = alive & -alive
        frontier = component
        while frontier:
            u = (frontier & -frontier).bit_length() - 1
            frontier &= frontier - 1
            inner = masks[u] & alive & ~component
            component |= inner
            frontier |= inner
        sizes.append(component.bit_count())
        alive &= ~component
    return sizes


def _balanced(masks: List[int], removed: int, p: Fraction) -> bool:
    everything = (1 << len(masks)) - 1
    rest = everything & ~removed
    largest = max(component_sizes(masks, rest), default=0)
    return largest * p.denominator <= p.numerator * rest.bit_count()


def is_p_separator(graph: GraphLike, X: Iterable[int], p: Union[Fraction, int, str]) -> bool:
    """
    Whether X is a p-separator of graph, in exact arithmetic.

    Args:
        graph (GraphLike): the graph.
        X (Iterable[int]): the candidate separator.
        p (Union[Fraction, int, str]): the balance, in [2/3, 1).

    Raises:
        OutOfRange: if p is not in [2/3, 1).

    Returns:
        bool: True iff every component of graph - X has at most p |V - X| vertices.
    """
    value = check_p(p)
    return _balanced(neighbor_masks(graph), mask_of(X), value)


@dataclass(frozen=True)
class SeparatorResult:
    """
    A smallest p-separator.
    """

    separator: Tuple[int, ...]  #: The separator, sorted.
    p: Fraction  #: The balance.
    is_minimum: bool  #: True if no smaller set is a p-separator.
    components: Tuple[int, ...] = ()  #: Sizes of the components left.

    @property
    def size(self) -> int:
        """Size of the separator."""
        return len(self.separator)

    def as_dict(self) -> Dict[str, Any]:
        """
        Returns:
            Dict[str, Any]: the result, for reports.
        """
        return {
            "separator": list(self.separator),
            "size": self.size,
            "p": self.p,
            "is_minimum": self.is_minimum,
            "components": list(self.components),
        }


def min_balanced_separator(
    graph: GraphLike,
    p: Union[Fraction, int, str] = MIN_P,
    max_vertices: int = DEFAULT_SEPARATOR_MAX_VERTICES,
) -> SeparatorResult:
    """
    Smallest p-separator, by trying every vertex set by increasing size.

    Sets of the same size are tried in lexicographic order, so the result is
    the lexicographically smallest minimum separator.

    Args:
        graph (GraphLike): the graph.
        p (Union[Fraction, int, str], optional): the balance. Defaults to 2/3.
        max_vertices (int, optional): size cap. Defaults to DEFAULT_SEPARATOR_MAX_VERTICES.

    Raises:
        OutOfRange: if p is not in [2/3, 1).
        CapExceeded: if the graph has more than max_vertices vertices.

    Returns:
        SeparatorResult: a minimum p-separator.
    """
    value = check_p(p)
    masks = neighbor_masks(graph)
    size = len(masks)
    if size > max_vertices:
        raise CapExceeded("exhaustive separator search", size, max_vertices)
    everything = (1 << size) - 1
    for separator_size in range(size + 1):
        for candidate in combinations(range(size), separator_size):
            removed = mask_of(candidate)
            if _balanced(masks, removed, value):
                logger.debug("Minimum %s-separator of size %i.", str(value), separator_size)
                return SeparatorResult(
                    separator=candidate,
                    p=value,
                    is_minimum=True,
                    components=tuple(component_sizes(masks, everything & ~removed)),
                )
    # unreachable: the whole vertex set is a p-separator
    raise AssertionError("No p-separator found.")
