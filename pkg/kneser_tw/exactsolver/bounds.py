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
Treewidth bounds: minor-min-width from below, greedy eliminations from above.
"""
import logging
from enum import Enum
from typing import List, Tuple

from kneser_tw.exactsolver.elimination import eliminate, fill_in_count
from kneser_tw.utils import GraphLike, iter_bits, neighbor_masks

logger = logging.getLogger(__name__)


class Heuristic(str, Enum):
    """
    Greedy elimination heuristics.
    """

    MIN_DEGREE = "min-degree"  #: Eliminate a vertex of minimum degree.
    MIN_FILL = "min-fill"  #: Eliminate a vertex adding the fewest edges.


def minor_min_width(masks: List[int], alive: int) -> int:
    """
    Minor-min-width lower bound of the subgraph induced by alive.

    Repeatedly take a vertex of minimum degree, record its degree and contract
    it into its neighbour of minimum degree (or delete it when isolated). Ties
    go to the smallest vertex. The minimum degree of a minor never exceeds the
    treewidth.

    Args:
        masks (List[int]): neighbour bitmasks.
        alive (int): bitmask of the vertices to consider.

    Returns:
        int: the bound, -1 for an empty vertex set.
    """
    current = [mask & alive for mask in masks]
    best = 0 if alive else -1
    while alive.bit_count() > 1:
        v = min(iter_bits(alive), key=lambda u: current[u].bit_count())
        degree = current[v].bit_count()
        best = max(best, degree)
        v_bit = 1 << v
        alive &= ~v_bit
        if degree == 0:
            continue
        u = min(iter_bits(current[v]), key=lambda w: current[w].bit_count())
        u_bit = 1 << u
        for w in iter_bits(current[v]):
            if w != u:
                current[w] = (current[w] & ~v_bit) | u_bit
        current[u] = (current[u] | current[v]) & ~u_bit & ~v_bit
        current[v] = 0
    return best


def treewidth_lower_bound(graph: GraphLike) -> int:
    """
    Minor-min-width lower bound on the treewidth.

    Args:
        graph (GraphLike): the graph.

    Returns:
        int: a lower bound on the treewidth.
    """
    masks = neighbor_masks(graph)
    return minor_min_width(masks, (1 << len(masks)) - 1)


def greedy_order(masks: List[int], heuristic: Heuristic) -> Tuple[int, List[int]]:
    """
    Greedy elimination, smallest vertex first among ties.

    Args:
        masks (List[int]): neighbour bitmasks.
        heuristic (Heuristic): the selection rule.

    Returns:
        Tuple[int, List[int]]: the width of the ordering and the ordering.
    """
    current = list(masks)
    alive = (1 << len(masks)) - 1
    width = 0 if masks else -1
    order = []
    while alive:
        if heuristic is Heuristic.MIN_DEGREE:
            v = min(iter_bits(alive), key=lambda u: current[u].bit_count())
        else:
            v = min(iter_bits(alive), key=lambda u: fill_in_count(current, u))
        width = max(width, current[v].bit_count())
        current = eliminate(current, v)
        alive &= ~(1 << v)
        order.append(v)
    return width, order


def greedy_upper_bound(
    graph: GraphLike, heuristic: Heuristic = Heuristic.MIN_FILL
) -> Tuple[int, List[int]]:
    """
    Upper bound on the treewidth from a greedy elimination ordering.

    Args:
        graph (GraphLike): the graph.
        heuristic (Heuristic, optional): the selection rule. Defaults to Heuristic.MIN_FILL.

    Returns:
        Tuple[int, List[int]]: the width and the elimination ordering.
    """
    width, order = greedy_order(neighbor_masks(graph), Heuristic(heuristic))
    logger.debug("Greedy %s ordering has width %i.", Heuristic(heuristic).value, width)
    return width, order
