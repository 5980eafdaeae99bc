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
Exact treewidth by branch and bound over elimination prefixes.

The search eliminates one vertex per level, keeps the width reached so far,
and prunes a state once the larger of that width and the minor-min-width of
the remaining graph reaches the incumbent. The remaining graph only depends
on the set of eliminated vertices, which is used to memoize the states. A
simplicial vertex (or an almost simplicial one of small degree) is eliminated
without branching.
"""
import logging
from typing import Dict, List, Optional

from kneser_tw.exactsolver.base import (
    BaseTreewidthSolver,
    Deadline,
    Incumbent,
    SolveMethod,
    SolveStats,
)
from kneser_tw.exactsolver.bounds import minor_min_width
from kneser_tw.exactsolver.elimination import eliminate
from kneser_tw.utils import iter_bits

logger = logging.getLogger(__name__)


def _is_clique(masks: List[int], vertices: int) -> bool:
    return all(vertices & ~(1 << u) & ~masks[u] == 0 for u in iter_bits(vertices))


def _reduction_vertex(masks: List[int], alive: int, lower: int) -> Optional[int]:
    """
    Smallest vertex that can be eliminated first in an optimal ordering: a
    simplicial vertex, or an almost simplicial vertex of degree at most lower.
    """
    for v in iter_bits(alive):
        neighbourhood = masks[v]
        if _is_clique(masks, neighbourhood):
            return v
        if neighbourhood.bit_count() <= lower and any(
            _is_clique(masks, neighbourhood & ~(1 << u)) for u in iter_bits(neighbourhood)
        ):
            return v
    return None


class BranchAndBoundSolver(BaseTreewidthSolver):
    """
    Exact treewidth by depth-first branch and bound.
    """

    method = SolveMethod.BRANCH_AND_BOUND

    @property
    def max_vertices(self) -> int:
        return self.limits.bnb_max_vertices

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
        # eliminated set -> smallest width with which it was expanded
        seen: Dict[int, int] = {}

        def branch(current: List[int], alive: int, order: List[int], width: int) -> None:
            stats.nodes += 1
            if stats.nodes % 256 == 0:
                deadline.check()
            if incumbent.width <= lower:
                return
            remaining = alive.bit_count()
            finish = max(width, remaining - 1)
            if finish < incumbent.width:
                incumbent.update(finish, order + list(iter_bits(alive)))
            if remaining - 1 <= width:
                return
            eliminated = everything & ~alive
            previous = seen.get(eliminated)
            if previous is not None and previous <= width:
                return
            seen[eliminated] = width
            local = minor_min_width(current, alive)
            if max(width, local) >= incumbent.width:
                return
            forced = _reduction_vertex(current, alive, local)
            candidates = [forced] if forced is not None else list(iter_bits(alive))
            for v in candidates:
                reached = max(width, current[v].bit_count())
                if reached >= incumbent.width:
                    continue
                branch(eliminate(current, v), alive & ~(1 << v), order + [v], reached)

        branch(list(masks), everything, [], 0)
        logger.debug("Branch and bound closed after %i states.", stats.nodes)
