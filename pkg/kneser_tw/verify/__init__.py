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
Exact verification of the inequalities, thresholds and case analyses behind
the treewidth formula of generalized Kneser graphs.
"""
from .reports import (
    ConditionId,
    ConditionReport,
    Relation,
    ThresholdResult,
    ThresholdVerdict,
)
from .lemmas import (
    DEFAULT_ENUMERATION_CAP,
    FProfile,
    check_degree_bound,
    check_f_monotone,
    check_lemma5,
    check_lemma8_separator_bound,
    check_theorem9,
    f_hypothesis,
    f_profile,
    intersection_sum,
    treewidth_formula_guaranteed,
)
from .thresholds import compute_K, compute_Kprime, default_window, threshold_verdict
from .cases import DEFAULT_HORIZON, DEFAULT_LN_EPS, case_sum, check_corollary14_cases
from .bounds import binomial_threshold, compare_bounds, cubic_threshold
from .replay import replay, reproduces
from .suites import (
    DEFAULT_RANGES,
    SUITE_PARAMETERS,
    Suite,
    SuiteOptions,
    SuiteResult,
    run_suite,
    suite_ranges,
)
