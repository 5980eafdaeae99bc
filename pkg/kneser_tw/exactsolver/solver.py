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
Entry points of the exact solvers.
"""
import logging
from dataclasses import dataclass
from typing import Any, Dict, Optional

from kneser_tw.exactsolver.base import BaseTreewidthSolver, SolveMethod, SolveResult, SolverLimits
from kneser_tw.exactsolver.branch_and_bound import BranchAndBoundSolver
from kneser_tw.exactsolver.dp import SubsetDPSolver
from kneser_tw.kneser import DEFAULT_MAX_VERTICES, KneserParams, build_graph
from kneser_tw.tdecomp import upper_bound_formula
from kneser_tw.utils import GraphLike

logger = logging.getLogger(__name__)

SOLVERS = {
    SolveMethod.SUBSET_DP: SubsetDPSolver,
    SolveMethod.BRANCH_AND_BOUND: BranchAndBoundSolver,
}


def make_solver(method: SolveMethod, limits: Optional[SolverLimits] = None) -> BaseTreewidthSolver:
    """
    Args:
        method (SolveMethod): the method.
        limits (SolverLimits, optional): resource limits. Defaults to None.

    Returns:
        BaseTreewidthSolver: a solver implementing the method.
    """
    return SOLVERS[SolveMethod(method)](limits)


def exact_treewidth(graph: GraphLike, limits: Optional[SolverLimits] = None) -> SolveResult:
    """
    Exact treewidth with a validated certificate.

    Unless limits forces a method, the subset DP is used up to its cap and the
    branch and bound above it. Beyond the caps, or when the time limit is
    reached, the result brackets the treewidth and is marked non exact.

    Args:
        graph (GraphLike): the graph.
        limits (SolverLimits, optional): resource limits. Defaults to SolverLimits().

    Returns:
        SolveResult: the result.
    """
    limits = limits if limits is not None else SolverLimits()
    method = limits.method
    if method is None:
        if graph.number_of_nodes() <= limits.dp_max_vertices:
            method = SolveMethod.SUBSET_DP
        else:
            method = SolveMethod.BRANCH_AND_BOUND
    return make_solver(method, limits).solve(graph)


@dataclass
class UpperBoundProbe:
    """
    Comparison of the exact treewidth of K(n, k, t) with C(n, k) - C(n-t, k-t) - 1.
    """

    params: KneserParams
    formula: int  #: C(n, k) - C(n-t, k-t) - 1.
    result: SolveResult
    equal: Optional[bool]  #: Whether the treewidth equals the formula, None if not exact.

    def as_dict(self) -> Dict[str, Any]:
        """
        Returns:
            Dict[str, Any]: the probe, for reports.
        """
        return {
            "params": self.params.as_dict(),
            "formula": self.formula,
            "equal": self.equal,
            "result": self.result.as_dict(),
        }


def probe_upper_bound(
    params: KneserParams,
    limits: Optional[SolverLimits] = None,
    max_vertices: int = DEFAULT_MAX_VERTICES,
) -> UpperBoundProbe:
    """
    Solve K(n, k, t) exactly and record whether the star bound is attained.

    Args:
        params (KneserParams): the parameters.
        limits (SolverLimits, optional): resource limits. Defaults to None.
        max_vertices (int, optional): materialization cap. Defaults to DEFAULT_MAX_VERTICES.

    Returns:
        UpperBoundProbe: the comparison.
    """
    graph = build_graph(params, max_vertices=max_vertices)
    graph.require_materialized()
    result = exact_treewidth(graph, limits)
    formula = upper_bound_formula(params)
    equal = result.treewidth == formula if result.exact else None
    logger.info("%s: treewidth %s, formula %i.", str(params), str(result), formula)
    return UpperBoundProbe(params, formula, result, equal)
