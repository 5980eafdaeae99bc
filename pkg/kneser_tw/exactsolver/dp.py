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
Exact treewidth by dynamic programming over eliminated vertex sets.

For a set S of eliminated vertices and v outside S, Q(S, v) is the set of
vertices outside S + v reachable from v through S; it is the neighbourhood of
v once S has been eliminated. The best width of an ordering starting with S is

    TW(S + v) = min over v of max(TW(S), |Q(S, v)|)

and the treewidth is TW(V). The sets are processed by increasing size, one
layer at a time, and states whose value reaches the incumbent are dropped.
"""
import logging
from typing import Dict, List, Tuple

from kneser_tw.exactsolver.base import (
    BaseTreewidthSolver,
    Deadline,
    Incumbent,
    SolveMethod,
    SolveStats,
)
from kneser_tw.utils import iter_bits

logger = logging.getLogger(__name__)

# eliminated set -> (best value, last eliminated vertex)
Layer = Dict[int, Tuple[int, int]]


def _components(masks: List[int], eliminated: int) -> List[Tuple[int, int]]:
    """
    Connected components of the subgraph induced by eliminated, with the
    vertices outside eliminated adjacent to them.
    """
    components = []
    unvisited = eliminated
    while unvisited:
        seed = unvisited & -unvisited
        component = seed
        frontier = seed
        boundary = 0
        while frontier:
            u = (frontier & -frontier).bit_length() - 1
            frontier &= frontier - 1
            boundary |= masks[u] & ~eliminated
            inner = masks[u] & eliminated & ~component
            component |= inner
            frontier |= inner
        components.append((component, boundary))
        unvisited &= ~component
    return components


def _backtrack(layers: List[Layer], eliminated: int) -> List[int]:
    order = []
    while eliminated:
        _, v = layers[eliminated.bit_count()][eliminated]
        order.append(v)
        eliminated &= ~(1 << v)
    return order[::-1]


class SubsetDPSolver(BaseTreewidthSolver):
    """
    Exact treewidth by layered dynamic programming over vertex subsets.
    """

    method = SolveMethod.SUBSET_DP

    @property
    def max_vertices(self) -> int:
        return self.limits.dp_max_vertices

    def _search(
        self,
        masks: List[int],
        lower: int,
        incumbent: Incumbent,
        deadline: Deadline,
        stats: SolveStats,
    ) -> None:
        size = len(masks)
        everything = (1 << size) - 1
        layers: List[Layer] = [{0: (0, -1)}]
        for depth in range(size + 1):
            following: Layer = {}
            for eliminated, (value, _) in layers[depth].items():
                stats.nodes += 1
                if stats.nodes % 1024 == 0:
                    deadline.check()
                # any order of the remaining vertices has width <= size - depth - 1
                finish = max(value, size - depth - 1)
                if finish < incumbent.width:
                    rest = list(iter_bits(everything & ~eliminated))
                    incumbent.update(finish, _backtrack(layers, eliminated) + rest)
                    if incumbent.width <= lower:
                        return
                components = _components(masks, eliminated)
                for v in iter_bits(everything & ~eliminated):
                    neighbourhood = masks[v] & ~eliminated
                    for component, boundary in components:
                        if masks[v] & component:
                            neighbourhood |= boundary
                    candidate = max(value, (neighbourhood & ~(1 << v)).bit_count())
                    if candidate >= incumbent.width:
                        continue
                    key = eliminated | 1 << v
                    known = following.get(key)
                    if known is None or candidate < known[0]:
                        following[key] = (candidate, v)
            logger.debug(
                "Layer %i: %i states, incumbent %i.", depth + 1, len(following), incumbent.width
            )
            if not following:
                return
            layers.append(following)
