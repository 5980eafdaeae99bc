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
Ground-truth oracles for small graphs: exact treewidth with certificates,
treewidth bounds and balanced separators.
"""
from .bounds import Heuristic, greedy_upper_bound, minor_min_width, treewidth_lower_bound
from .elimination import (
    decomposition_from_order,
    eliminate,
    fill_in_count,
    width_of_order,
)
from .base import (
    DEFAULT_BNB_MAX_VERTICES,
    DEFAULT_DP_MAX_VERTICES,
    BaseTreewidthSolver,
    SolveMethod,
    SolveResult,
    SolverLimits,
    SolveStats,
)
from .dp import SubsetDPSolver
from .branch_and_bound import BranchAndBoundSolver
from .solver import UpperBoundProbe, exact_treewidth, make_solver, probe_upper_bound
from .separator import (
    DEFAULT_SEPARATOR_MAX_VERTICES,
    MIN_P,
    SeparatorResult,
    check_p,
    component_sizes,
    is_p_separator,
    min_balanced_separator,
)
