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
Independent sets of generalized Kneser graphs.

Two explicit families are built from their subsets: point pencils (all the
k-subsets containing a fixed t-set) and crowded sets (all the k-subsets with
at least t+1 elements in [t+2]). The independence number of a small graph is
computed exactly by :func:`brute_force_alpha`.
"""
import logging
from itertools import combinations
from typing import FrozenSet, Iterable, List, NamedTuple, Optional

from kneser_tw.combinatorics import KSubset, binom, colex_rank
from kneser_tw.exceptions import CapExceeded, InvalidSubset, OutOfRange
from kneser_tw.kneser.params import KneserParams
from kneser_tw.utils import Edge, GraphLike, iter_bits, neighbor_masks

logger = logging.getLogger(__name__)

VertexSet = FrozenSet[int]

DEFAULT_ALPHA_MAX_VERTICES = 40  #: Default cap of the brute-force search.


class AlphaResult(NamedTuple):
    """
    Result of the exact independence number search.
    """

    size: int  #: Independence number.
    witness: VertexSet  #: A maximum independent set, the lexicographically smallest one.
    nodes: int  #: Number of explored search nodes.


def pencil_independent_set(params: KneserParams, base: Iterable[int]) -> VertexSet:
    """
    The point pencil of base: the vertices whose subset contains base.

    Args:
        params (KneserParams): the parameters.
        base (Iterable[int]): a t-subset of [n].

    Raises:
        InvalidSubset: if base does not have exactly t distinct elements of [n].

    Returns:
        VertexSet: C(n-t, k-t) pairwise non-adjacent vertices.
    """
    base_elements = sorted(set(base))
    if len(base_elements) != params.t:
        raise InvalidSubset(
            f"The base of a pencil must have t={params.t} elements (got {base_elements})."
        )
    base_subset = KSubset(tuple(base_elements), params.n)
    others = [e for e in range(1, params.n + 1) if e not in base_subset.elements]
    return frozenset(
        colex_rank(KSubset.of(base_subset.elements + extra, params.n))
        for extra in combinations(others, params.k - params.t)
    )


def crowded_set_size(params: KneserParams) -> int:
    """
    Size of :func:`crowded_independent_set`.

    Args:
        params (KneserParams): the parameters.

    Returns:
        int: sum over j = t+1..min(k, t+2) of C(t+2, j) C(n-t-2, k-j).
    """
    n, k, t = params.n, params.k, params.t
    return sum(binom(t + 2, j) * binom(n - t - 2, k - j) for j in range(t + 1, min(k, t + 2) + 1))


def crowded_independent_set(params: KneserParams) -> VertexSet:
    """
    The vertices with at least t+1 elements in [t+2].

    Two (t+1)-subsets of a (t+2)-set share t elements, so the set is
    independent. It is larger than a pencil when n < (t+1)(k+1-t).

    Args:
        params (KneserParams): the parameters.

    Raises:
        OutOfRange: if t+2 > n.

    Returns:
        VertexSet: the crowded set.
    """
    n, k, t = params.n, params.k, params.t
    if t + 2 > n:
        raise OutOfRange("t+2", t + 2, f"<= n = {n}")
    inside = range(1, t + 3)
    outside = range(t + 3, n + 1)
    result = set()
    for j in range(t + 1, min(k, t + 2) + 1):
        for head in combinations(inside, j):
            for tail in combinations(outside, k - j):
                result.add(colex_rank(KSubset(head + tail, n)))
    return frozenset(result)


def upper_bound_not_tight(params: KneserParams) -> bool:
    """
    Whether the crowded set beats the pencils, in which case the star
    decomposition built from a pencil is not optimal.

    Args:
        params (KneserParams): the parameters.

    Returns:
        bool: True iff n < (t+1)(k+1-t).
    """
    return not params.in_wilson_range


def find_edge(graph: GraphLike, vertices: Iterable[int]) -> Optional[Edge]:
    """
    First edge inside a vertex set.

    Args:
        graph (GraphLike): the graph.
        vertices (Iterable[int]): the vertex set.

    Returns:
        Optional[Edge]: the lexicographically smallest edge (u, v), u < v, or None if the set is independent.
    """
    ordered = sorted(set(vertices))
    for i, u in enumerate(ordered):
        for v in ordered[i + 1 :]:
            if graph.has_edge(u, v):
                return (u, v)
    return None


def is_independent(graph: GraphLike, vertices: Iterable[int]) -> bool:
    """
    Args:
        graph (GraphLike): the graph.
        vertices (Iterable[int]): the vertex set.

    Returns:
        bool: True iff no two vertices of the set are adjacent.
    """
    return find_edge(graph, vertices) is None


def _clique_cover_size(candidates: int, masks: List[int]) -> int:
    """
    Number of cliques of a greedy clique cover of the candidates: an upper
    bound on the independence number of the subgraph they induce.
    """
    count = 0
    while candidates:
        v = (candidates & -candidates).bit_length() - 1
        candidates &= ~(1 << v)
        extension = candidates & masks[v]
        while extension:
            u = (extension & -extension).bit_length() - 1
            candidates &= ~(1 << u)
            extension &= masks[u]
        count += 1
    return count


def brute_force_alpha(
    graph: GraphLike, max_vertices: int = DEFAULT_ALPHA_MAX_VERTICES
) -> AlphaResult:
    """
    Exact independence number by branch and bound.

    The search branches on the smallest candidate vertex, including it first,
    and prunes with a greedy clique cover. The first maximum set found is the
    lexicographically smallest one, so the witness is deterministic.

    Args:
        graph (GraphLike): the graph.
        max_vertices (int, optional): size cap. Defaults to DEFAULT_ALPHA_MAX_VERTICES.

    Raises:
        CapExceeded: if the graph has more than max_vertices vertices.

    Returns:
        AlphaResult: size, witness and number of explored nodes.
    """
    size = graph.number_of_nodes()
    if size > max_vertices:
        raise CapExceeded("brute-force independence number", size, max_vertices)
    masks = neighbor_masks(graph)
    best_set = 0
    best_size = -1
    nodes = 0

    def expand(chosen: int, chosen_size: int, candidates: int) -> None:
        nonlocal best_set, best_size, nodes
        nodes += 1
        if not candidates:
            if chosen_size > best_size:
                best_set, best_size = chosen, chosen_size
            return
        if chosen_size + _clique_cover_size(candidates, masks) <= best_size:
            return
        v = (candidates & -candidates).bit_length() - 1
        bit = 1 << v
        expand(chosen | bit, chosen_size + 1, candidates & ~masks[v] & ~bit)
        expand(chosen, chosen_size, candidates & ~bit)

    expand(0, 0, (1 << size) - 1)
    logger.debug("Independence number %i found after %i nodes.", best_size, nodes)
    return AlphaResult(best_size, frozenset(iter_bits(best_set)), nodes)
