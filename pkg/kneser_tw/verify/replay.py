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
Recomputation of a report from its echoed parameters.
"""
from fractions import Fraction
from typing import Any, Dict

from kneser_tw.exactsolver import DEFAULT_SEPARATOR_MAX_VERTICES
from kneser_tw.utils import parse_range
from kneser_tw.verify.bounds import compare_bounds
from kneser_tw.verify.cases import DEFAULT_HORIZON, DEFAULT_LN_EPS, check_corollary14_cases
from kneser_tw.verify.lemmas import (
    check_degree_bound,
    check_f_monotone,
    check_lemma5,
    check_lemma8_separator_bound,
    check_theorem9,
)
from kneser_tw.verify.reports import ConditionId, ConditionReport
from kneser_tw.verify.thresholds import compute_Kprime

_THEOREM9_POSITION = {ConditionId.EQNS1: 0, ConditionId.EQNS2: 1, ConditionId.EQNS3: 2}


def _int(params: Dict[str, Any], key: str) -> int:
    return int(params[key])


def replay(report: ConditionReport) -> ConditionReport:
    """
    Evaluate the check of report again at its echoed parameters.

    Args:
        report (ConditionReport): a stored report.

    Returns:
        ConditionReport: the freshly computed report.
    """
    params = report.params
    condition = report.condition
    if condition in _THEOREM9_POSITION:
        reports = check_theorem9(_int(params, "n"), _int(params, "k"), _int(params, "t"))
        return reports[_THEOREM9_POSITION[condition]]
    if condition is ConditionId.LEMMA5:
        return check_lemma5(
            _int(params, "n"),
            _int(params, "k"),
            _int(params, "t"),
            enumeration_cap=_int(params, "enumeration_cap"),
        )
    if condition is ConditionId.LEMMA8:
        return check_lemma8_separator_bound(
            _int(params, "n"),
            _int(params, "k"),
            _int(params, "t"),
            Fraction(params["p"]),
            int(params.get("separator_cap", DEFAULT_SEPARATOR_MAX_VERTICES)),
        )
    if condition is ConditionId.F_MONOTONE:
        return check_f_monotone(_int(params, "n"), _int(params, "k"), _int(params, "t"))
    if condition is ConditionId.DEGREE_BOUND:
        return check_degree_bound(_int(params, "n"), _int(params, "k"), _int(params, "t"))
    if condition is ConditionId.THRESHOLD:
        return compute_Kprime(_int(params, "c"), parse_range(str(params["window"]))).to_report()
    if condition in (ConditionId.CASE1, ConditionId.CASE2, ConditionId.TAIL24):
        return check_corollary14_cases(
            _int(params, "t"),
            Fraction(params.get("eps", DEFAULT_LN_EPS)),
            _int(params, "horizon") if "horizon" in params else DEFAULT_HORIZON,
        )
    return compare_bounds(
        _int(params, "k"), _int(params, "t"), Fraction(params.get("eps", DEFAULT_LN_EPS))
    )


def reproduces(report: ConditionReport) -> bool:
    """
    Args:
        report (ConditionReport): a stored report.

    Returns:
        bool: True if replaying it gives the same verdict and the same sides.
    """
    fresh = replay(report)
    return (
        fresh.holds == report.holds
        and fresh.passed == report.passed
        and fresh.lhs == report.lhs
        and fresh.rhs == report.rhs
    )
