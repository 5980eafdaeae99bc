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
Elimination orderings.

Eliminating a vertex turns its current neighbourhood into a clique and removes
it. The width of an ordering is the largest neighbourhood met during the
elimination; the treewidth is the smallest width over all orderings. Graphs
are handled as lists of neighbour bitmasks.
"""
from typing import List, Sequence

from kneser_tw.exceptions import OutOfRange
from kneser_tw.tdecomp import TreeDecomposition
from kneser_tw.utils import GraphLike, iter_bits, neighbor_masks


def eliminate(masks: List[int], v: int) -> List[int]:
    """
    Eliminate v.

    Args:
        masks (List[int]): neighbour bitmasks of the current graph.
        v (int): the vertex to eliminate.

    Returns:
        List[int]: the bitmasks after the elimination (masks is not modified).
    """
    result = list(masks)
    neighbourhood = masks[v]
    bit = 1 << v
    for u in iter_bits(neighbourhood):
        result[u] = (result[u] | neighbourhood) & ~(1 << u) & ~bit
    result[v] = 0
    return result


def fill_in_count(masks: List[int], v: int) -> int:
    """
    Number of edges added by the elimination of v.

    Args:
        masks (List[int]): neighbour bitmasks.
        v (int): the vertex.

    Returns:
        int: number of non-adjacent pairs of neighbours of v.
    """
    neighbourhood = masks[v]
    missing = sum(
        (neighbourhood & ~masks[u] & ~(1 << u)).bit_count() for u in iter_bits(neighbourhood)
    )
    return missing // 2


def _check_order(order: Sequence[int], size: int) -> List[int]:
    result = list(order)
    if sorted(result) != list(range(size)):
        raise OutOfRange("elimination order", result, f"a permutation of 0..{size - 1}")
    return result


def higher_neighbourhoods(masks: List[int], order: Sequence[int]) -> List[int]:
    """
    Neighbourhood of each vertex at the time of its elimination.

    Args:
        masks (List[int]): neighbour bitmasks.
        order (Sequence[int]): elimination order.

    Returns:
        List[int]: bitmask of the i-th element is the neighbourhood of order[i].
    """
    current = list(masks)
    result = []
    for v in order:
        result.append(current[v])
        current = eliminate(current, v)
    return result


def width_of_order(graph: GraphLike, order: Sequence[int]) -> int:
    """
    Width of an elimination ordering.

    Args:
        graph (GraphLike): the graph.
        order (Sequence[int]): a permutation of the vertices.

    Raises:
        OutOfRange: if order is not a permutation of the vertices.

    Returns:
        int: largest neighbourhood size at elimination time (-1 for the empty graph).
    """
    masks = neighbor_masks(graph)
    order = _check_order(order, len(masks))
    return max((h.bit_count() for h in higher_neighbourhoods(masks, order)), default=-1)


def decomposition_from_order(graph: GraphLike, order: Sequence[int]) -> TreeDecomposition:
    """
    Tree decomposition induced by an elimination ordering.

    Node i holds order[i] and its neighbourhood at elimination time. Its parent
    is the node of the first eliminated vertex of that neighbourhood. Nodes
    without parent (one per connected component) are attached to the last
    node.

    Args:
        graph (GraphLike): the graph.
        order (Sequence[int]): a permutation of the vertices.

    Raises:
        OutOfRange: if order is not a permutation of the vertices.

    Returns:
        TreeDecomposition: a decomposition whose width is the width of the order.
    """
    masks = neighbor_masks(graph)
    order = _check_order(order, len(masks))
    if not order:
        return TreeDecomposition.from_bags([()])
    position = {v: i for i, v in enumerate(order)}
    higher = higher_neighbourhoods(masks, order)
    bags = []
    tree_edges = []
    roots = []
    for i, (v, neighbourhood) in enumerate(zip(order, higher)):
        bags.append([v, *iter_bits(neighbourhood)])
        if neighbourhood:
            tree_edges.append((i, min(position[u] for u in iter_bits(neighbourhood))))
        else:
            roots.append(i)
    # the last vertex is always a root
    last = roots[-1]
    tree_edges.extend((root, last) for root in roots[:-1])
    return TreeDecomposition.from_bags(bags, tree_edges)
