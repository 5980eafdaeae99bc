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
Generalized Kneser graphs K(n, k, t).

Vertex v is the k-subset of [n] of colex rank v. Below a configurable cap the
adjacency is materialized with numpy from the incidence matrix M (one row per
vertex): M @ M.T holds every pairwise intersection size. Above the cap the
graph is still usable through the adjacency oracle, which decodes ranks on
demand.
"""
import logging
from functools import cached_property
from typing import Iterator, List, Optional, Tuple

import networkx as nx
import numpy as np

from kneser_tw.combinatorics import KSubset, binom, colex_rank, colex_unrank, iter_colex
from kneser_tw.exceptions import CapExceeded, InvalidSubset
from kneser_tw.kneser.params import KneserParams

logger = logging.getLogger(__name__)

DEFAULT_MAX_VERTICES = 4096  #: Default materialization cap.


def is_adjacent(u: KSubset, v: KSubset, t: int) -> bool:
    """
    Adjacency in K(n, k, t): |u & v| < t.

    Args:
        u (KSubset): first vertex.
        v (KSubset): second vertex.
        t (int): intersection threshold.

    Raises:
        InvalidSubset: if u and v are not k-subsets of the same [n].

    Returns:
        bool: True iff u and v share fewer than t elements.
    """
    if u.n != v.n or u.k != v.k:
        raise InvalidSubset(
            f"{u} and {v} are not subsets of the same size of the same ground set."
        )
    return (u.mask & v.mask).bit_count() < t


def max_degree_formula(params: KneserParams) -> int:
    """
    Degree of every vertex of K(n, k, t): the number of k-subsets meeting a
    fixed k-subset in at most t-1 elements.

    Args:
        params (KneserParams): the parameters.

    Returns:
        int: sum over i < t of C(k, i) C(n-k, k-i).
    """
    n, k, t = params.n, params.k, params.t
    return sum(binom(k, i) * binom(n - k, k - i) for i in range(t))


class KneserGraph:
    """
    The generalized Kneser graph K(n, k, t) on colex-ranked vertices.

    The class exposes the small graph interface used throughout kneser-tw
    (number_of_nodes, neighbors, edges, has_edge), the same as networkx.

    Example:

    .. code-block:: python

        graph = build_graph(validate_params(5, 2, 1))  # Petersen graph
        graph.number_of_nodes() # 10
        graph.degree(0) # 3
    """

    params: KneserParams  #: Parameters of the graph.
    max_vertices: int  #: Materialization cap used at construction.
    adjacency: Optional[np.ndarray]  #: Boolean adjacency matrix, None above the cap.
    _bitsets: Optional[List[int]]  #: Adjacency as one python int per vertex.

    def __init__(self, params: KneserParams, max_vertices: int = DEFAULT_MAX_VERTICES):
        """
        Args:
            params (KneserParams): parameters of the graph.
            max_vertices (int, optional): materialization cap. Defaults to DEFAULT_MAX_VERTICES.
        """
        self.params = params
        self.max_vertices = max_vertices
        self.adjacency = None
        self._bitsets = None
        if params.num_vertices <= max_vertices:
            self._materialize()
        else:
            logger.warning(
                "%s has %i vertices, above the cap %i. Using the adjacency oracle.",
                str(params),
                params.num_vertices,
                max_vertices,
            )

    def _materialize(self) -> None:
        n, k, t = self.params.n, self.params.k, self.params.t
        size = self.params.num_vertices
        logger.debug("Materializing %s with %i vertices.", str(self.params), size)
        incidence = np.zeros((size, n), dtype=np.int32)
        for rank, subset in enumerate(iter_colex(n, k)):
            incidence[rank, np.asarray(subset.elements) - 1] = 1
        intersections = incidence @ incidence.T
        adjacency = intersections < t
        np.fill_diagonal(adjacency, False)
        self.adjacency = adjacency
        self._bitsets = [
            int.from_bytes(np.packbits(row, bitorder="little").tobytes(), "little")
            for row in adjacency
        ]

    @cached_property
    def _vertex_masks(self) -> List[int]:
        """Element mask of every vertex, by rank, for the oracle mode."""
        return [subset.mask for subset in iter_colex(self.params.n, self.params.k)]

    @property
    def materialized(self) -> bool:
        """True if the adjacency is stored."""
        return self.adjacency is not None

    def require_materialized(self) -> None:
        """
        Raises:
            CapExceeded: if the adjacency is not materialized.
        """
        if not self.materialized:
            raise CapExceeded(
                f"materialization of {self.params}",
                self.params.num_vertices,
                self.max_vertices,
            )

    def number_of_nodes(self) -> int:
        """
        Returns:
            int: C(n, k).
        """
        return self.params.num_vertices

    def number_of_edges(self) -> int:
        """
        Returns:
            int: number of edges, |V| * degree / 2 (the graph is regular).
        """
        if self.adjacency is not None:
            return int(self.adjacency.sum()) // 2
        return self.number_of_nodes() * max_degree_formula(self.params) // 2

    def vertex_subset(self, v: int) -> KSubset:
        """
        Args:
            v (int): vertex rank.

        Returns:
            KSubset: the k-subset of rank v.
        """
        return colex_unrank(v, self.params.k, self.params.n)

    def rank_of(self, subset: KSubset) -> int:
        """
        Args:
            subset (KSubset): a k-subset of [n].

        Raises:
            InvalidSubset: if the subset does not belong to the graph.

        Returns:
            int: its vertex rank.
        """
        if subset.n != self.params.n or subset.k != self.params.k:
            raise InvalidSubset(f"{subset} is not a vertex of {self.params}.")
        return colex_rank(subset)

    def has_edge(self, u: int, v: int) -> bool:
        """
        Args:
            u (int): first vertex.
            v (int): second vertex.

        Returns:
            bool: True iff u and v are adjacent.
        """
        if self._bitsets is not None:
            return bool(self._bitsets[u] >> v & 1)
        return u != v and is_adjacent(
            self.vertex_subset(u), self.vertex_subset(v), self.params.t
        )

    def neighbors(self, v: int) -> Iterator[int]:
        """
        Args:
            v (int): vertex.

        Yields:
            int: the neighbours of v in increasing order.
        """
        if self.adjacency is not None:
            yield from (int(u) for u in np.flatnonzero(self.adjacency[v]))
            return
        mask = self.vertex_subset(v).mask
        for u, other in enumerate(self._vertex_masks):
            if (other & mask).bit_count() < self.params.t:
                yield u

    def neighbor_bitset(self, v: int) -> int:
        """
        Args:
            v (int): vertex.

        Returns:
            int: bitmask of the neighbours of v.
        """
        if self._bitsets is not None:
            return self._bitsets[v]
        mask = 0
        for u in self.neighbors(v):
            mask |= 1 << u
        return mask

    def degree(self, v: int) -> int:
        """
        Args:
            v (int): vertex.

        Returns:
            int: degree of v.
        """
        return self.neighbor_bitset(v).bit_count()

    def degrees(self) -> np.ndarray:
        """
        Returns:
            np.ndarray: degree of every vertex, by rank.
        """
        self.require_materialized()
        assert self.adjacency is not None
        return self.adjacency.sum(axis=1)

    def edges(self) -> Iterator[Tuple[int, int]]:
        """
        Yields:
            Tuple[int, int]: edges (u, v) with u < v, in lexicographic order.
        """
        for u in range(self.number_of_nodes()):
            for v in self.neighbors(u):
                if v > u:
                    yield (u, v)

    def to_networkx(self) -> nx.Graph:
        """
        Returns:
            nx.Graph: the graph, vertices labelled by rank, with the subset as "subset" attribute.
        """
        graph = nx.Graph()
        for v in range(self.number_of_nodes()):
            graph.add_node(v, subset=str(self.vertex_subset(v)))
        graph.add_edges_from(self.edges())
        return graph

    def __repr__(self) -> str:
        return f"KneserGraph({self.params!r}, max_vertices={self.max_vertices})"

    def __str__(self) -> str:
        mode = "materialized" if self.materialized else "oracle"
        return f"Kneser graph {self.params} ({self.number_of_nodes()} vertices, {mode})"


def build_graph(
    params: KneserParams, max_vertices: int = DEFAULT_MAX_VERTICES
) -> KneserGraph:
    """
    Build K(n, k, t).

    Above the cap, a warning is logged and the returned graph only works
    through the adjacency oracle; call :meth:`KneserGraph.require_materialized`
    when materialization is mandatory.

    Args:
        params (KneserParams): the parameters.
        max_vertices (int, optional): materialization cap. Defaults to DEFAULT_MAX_VERTICES.

    Returns:
        KneserGraph: the graph.
    """
    logger.info("Building %s.", str(params))
    return KneserGraph(params, max_vertices=max_vertices)
