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
Star decompositions built from an independent set.

For an independent set A, the star whose center holds V minus A and whose
leaves hold {a} plus the neighbours of a, for every a in A, is a tree
decomposition. Its width is max(max degree over A, |V| - |A| - 1).
"""
import logging
from typing import Iterable

from kneser_tw.combinatorics import binom
from kneser_tw.exceptions import NotIndependent, OutOfRange
from kneser_tw.kneser import KneserParams, find_edge
from kneser_tw.tdecomp.decomposition import TreeDecomposition
from kneser_tw.utils import GraphLike

logger = logging.getLogger(__name__)


def star_decomposition(graph: GraphLike, indep: Iterable[int]) -> TreeDecomposition:
    """
    Star decomposition of graph around the independent set indep.

    The center is node 0. Leaf i+1 belongs to the i-th smallest vertex of
    indep. An empty set gives the single-bag decomposition.

    Args:
        graph (GraphLike): the graph.
        indep (Iterable[int]): an independent set of graph.

    Raises:
        OutOfRange: if a vertex is not in the graph.
        NotIndependent: if two vertices of indep are adjacent.

    Returns:
        TreeDecomposition: the star decomposition.
    """
    size = graph.number_of_nodes()
    leaves = sorted(set(indep))
    for v in leaves:
        if not 0 <= v < size:
            raise OutOfRange("vertex", v, f"[0, {size})")
    edge = find_edge(graph, leaves)
    if edge is not None:
        raise NotIndependent(*edge)

    leaf_set = set(leaves)
    bags = [[v for v in range(size) if v not in leaf_set]]
    for a in leaves:
        bags.append([a, *graph.neighbors(a)])
    td = TreeDecomposition.from_bags(bags, [(0, i) for i in range(1, len(bags))])
    logger.debug(
        "Star decomposition around %i vertices has width %i.", len(leaves), td.width
    )
    return td


def upper_bound_formula(params: KneserParams) -> int:
    """
    Width of the star decomposition of K(n, k, t) built from a point pencil.

    Args:
        params (KneserParams): the parameters.

    Returns:
        int: C(n, k) - C(n-t, k-t) - 1, an upper bound on the treewidth.
    """
    return binom(params.n, params.k) - binom(params.n - params.t, params.k - params.t) - 1
