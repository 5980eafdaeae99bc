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
Abstract exact treewidth solver and its result types.
"""
import abc
import logging
import time
from dataclasses import dataclass, field
from enum import Enum
from typing import Any, Dict, List, Optional, Sequence, Tuple

from kneser_tw.exactsolver.bounds import Heuristic, greedy_order, minor_min_width
from kneser_tw.exactsolver.elimination import decomposition_from_order
from kneser_tw.exceptions import KneserTWError
from kneser_tw.tdecomp import TreeDecomposition, validate_decomposition
from kneser_tw.utils import GraphLike, neighbor_masks

logger = logging.getLogger(__name__)

DEFAULT_DP_MAX_VERTICES = 26  #: Default cap of the subset dynamic programming.
DEFAULT_BNB_MAX_VERTICES = 34  #: Default cap of the branch and bound.


class SolveMethod(str, Enum):
    """
    Exact treewidth methods.
    """

    SUBSET_DP = "subset-dp"  #: Dynamic programming over eliminated vertex sets.
    BRANCH_AND_BOUND = "branch-and-bound"  #: Depth-first search over elimination prefixes.


@dataclass(frozen=True)
class SolverLimits:
    """
    Resource limits of the exact solvers.
    """

    dp_max_vertices: int = DEFAULT_DP_MAX_VERTICES  #: Largest graph given to the subset DP.
    bnb_max_vertices: int = DEFAULT_BNB_MAX_VERTICES  #: Largest graph given to the branch and bound.
    time_limit: float = 0.0  #: Wall-clock limit in seconds, 0 for none.
    heuristic: Heuristic = Heuristic.MIN_FILL  #: Heuristic of the initial incumbent.
    method: Optional[SolveMethod] = None  #: Forced method, None to choose by size.


@dataclass
class SolveStats:
    """
    Statistics of a solver run.
    """

    nodes: int = 0  #: Number of search states expanded.
    elapsed: float = 0.0  #: Wall-clock time in seconds.
    timed_out: bool = False  #: True if the time limit stopped the search.
    capped: bool = False  #: True if the graph was too large for the method.


@dataclass
class SolveResult:
    """
    Result of an exact treewidth computation.

    When exact is False, the treewidth lies in [lower_bound, upper_bound] and
    treewidth holds the upper bound, which is the width of the certificate.
    """

    treewidth: int
    certificate: TreeDecomposition
    method: SolveMethod
    stats: SolveStats
    exact: bool = True
    lower_bound: int = 0
    upper_bound: int = 0
    order: Tuple[int, ...] = ()

    def as_dict(self) -> Dict[str, Any]:
        """
        Returns:
            Dict[str, Any]: the result without the certificate and the timing.
        """
        return {
            "treewidth": self.treewidth,
            "exact": self.exact,
            "lower_bound": self.lower_bound,
            "upper_bound": self.upper_bound,
            "method": self.method.value,
            "nodes": self.stats.nodes,
            "timed_out": self.stats.timed_out,
            "capped": self.stats.capped,
            "order": list(self.order),
        }

    def __str__(self) -> str:
        if self.exact:
            return f"treewidth {self.treewidth}"
        return f"treewidth in [{self.lower_bound}, {self.upper_bound}] (not exact)"


class SearchInterrupted(KneserTWError):
    """
    Raised inside a search when the time limit is reached.
    """


class Deadline:
    """
    Wall-clock deadline, checked by the searches between states.
    """

    def __init__(self, seconds: float):
        """
        Args:
            seconds (float): time budget, 0 or less for none.
        """
        self._end = time.monotonic() + seconds if seconds > 0 else None

    def check(self) -> None:
        """
        Raises:
            SearchInterrupted: if the deadline has passed.
        """
        if self._end is not None and time.monotonic() > self._end:
            raise SearchInterrupted("Time limit reached.")


@dataclass
class Incumbent:
    """
    Best elimination ordering found so far.
    """

    width: int
    order: List[int] = field(default_factory=list)

    def update(self, width: int, order: Sequence[int]) -> None:
        """
        Replace the incumbent if width improves it.

        Args:
            width (int): width of the ordering (or an upper bound of it).
            order (Sequence[int]): the ordering.
        """
        if width < self.width:
            logger.debug("New incumbent of width %i.", width)
            self.width = width
            self.order = list(order)


class BaseTreewidthSolver(abc.ABC):
    """
    Abstract exact treewidth solver.

    :meth:`solve` computes the minor-min-width lower bound and a greedy
    incumbent, runs :meth:`_search` while they differ, and turns the final
    ordering into a validated certificate.
    """

    method: SolveMethod  #: Method implemented by the solver.
    limits: SolverLimits  #: Resource limits.

    def __init__(self, limits: Optional[SolverLimits] = None):
        """
        Args:
            limits (SolverLimits, optional): resource limits. Defaults to SolverLimits().
        """
        self.limits = limits if limits is not None else SolverLimits()

    @property
    @abc.abstractmethod
    def max_vertices(self) -> int:
        """
        Largest graph the solver accepts.
        """

    @abc.abstractmethod
    def _search(
        self,
        masks: List[int],
        lower: int,
        incumbent: Incumbent,
        deadline: Deadline,
        stats: SolveStats,
    ) -> None:
        """
        Improve the incumbent until it is optimal.

        Args:
            masks (List[int]): neighbour bitmasks of the graph.
            lower (int): a lower bound on the treewidth.
            incumbent (Incumbent): the incumbent, updated in place.
            deadline (Deadline): deadline to check regularly.
            stats (SolveStats): statistics, updated in place.

        Raises:
            SearchInterrupted: if the deadline is reached.
        """

    def solve(self, graph: GraphLike) -> SolveResult:
        """
        Compute the treewidth of graph.

        Args:
            graph (GraphLike): the graph.

        Raises:
            KneserTWError: if the certificate does not validate.

        Returns:
            SolveResult: the treewidth, or bracketing bounds when a limit was hit.
        """
        start = time.perf_counter()
        masks = neighbor_masks(graph)
        size = len(masks)
        lower = minor_min_width(masks, (1 << size) - 1)
        upper, order = greedy_order(masks, self.limits.heuristic)
        incumbent = Incumbent(upper, order)
        stats = SolveStats()
        logger.info(
            "Solving a graph with %i vertices by %s (bounds [%i, %i]).",
            size,
            self.method.value,
            lower,
            upper,
        )
        if size > self.max_vertices:
            stats.capped = True
            logger.warning(
                "%i vertices exceed the %s cap %i: returning bounds only.",
                size,
                self.method.value,
                self.max_vertices,
            )
        elif lower < upper:
            try:
                self._search(masks, lower, incumbent, Deadline(self.limits.time_limit), stats)
            except SearchInterrupted:
                stats.timed_out = True
                logger.warning(
                    "Time limit of %s s reached after %i states.",
                    self.limits.time_limit,
                    stats.nodes,
                )

        certificate = decomposition_from_order(graph, incumbent.order)
        report = validate_decomposition(graph, certificate)
        if not report.valid:
            raise KneserTWError(
                f"Invalid certificate: {', '.join(str(v) for v in report.violations)}."
            )
        exact = not (stats.capped or stats.timed_out)
        width = certificate.width
        stats.elapsed = time.perf_counter() - start
        logger.info(
            "Treewidth %s %i after %i states.",
            "=" if exact else "<=",
            width,
            stats.nodes,
        )
        return SolveResult(
            treewidth=width,
            certificate=certificate,
            method=self.method,
            stats=stats,
            exact=exact,
            lower_bound=width if exact else min(lower, width),
            upper_bound=width,
            order=tuple(incumbent.order),
        )

    def __repr__(self) -> str:
        return f"{self.__class__.__name__}({self.limits!r})"

    def __str__(self) -> str:
        return f"{self.method.value} solver (cap {self.max_vertices} vertices)"
