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
Checks of the counting inequalities behind the treewidth formula.

All quantities are exact integers or fractions.
"""
import logging
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import List, Tuple, Union

from kneser_tw.combinatorics import binom
from kneser_tw.exactsolver import DEFAULT_SEPARATOR_MAX_VERTICES, check_p, min_balanced_separator
from kneser_tw.exceptions import InvalidParameters, ParamConstraint
from kneser_tw.kneser import build_graph, max_degree_formula, validate_params
from kneser_tw.verify.reports import ConditionId, ConditionReport, Relation

logger = logging.getLogger(__name__)

DEFAULT_ENUMERATION_CAP = 100_000  #: Largest C(n, k) enumerated by check_lemma5.


def _require_k_greater_than_t(n: int, k: int, t: int) -> None:
    if k <= t:
        raise InvalidParameters(ParamConstraint.K_GREATER_THAN_T, n, k, t)
    if t <= 0:
        raise InvalidParameters(ParamConstraint.T_POSITIVE, n, k, t)


def intersection_sum(n: int, k: int, t: int, upper: int) -> int:
    """
    Sum over s = 1..upper of C(t-1, s-1) C(k+1-t, s) C(k-t+s, s) C(n-t-s, k-t-s).

    It bounds the number of vertices meeting a fixed k-subset in at least t
    elements, weighted by how they meet a second, adjacent one.

    Args:
        n (int): n parameter.
        k (int): k parameter.
        t (int): t parameter.
        upper (int): last value of s.

    Returns:
        int: the sum.
    """
    return sum(
        binom(t - 1, s - 1) * binom(k + 1 - t, s) * binom(k - t + s, s) * binom(n - t - s, k - t - s)
        for s in range(1, upper + 1)
    )


def _classify(subset: Tuple[int, ...], k: int, t: int) -> List[int]:
    """Indices (1, 2, 3) of the disjoint families a k-subset belongs to."""
    inside_k = sum(1 for e in subset if e <= k)
    inside_t = sum(1 for e in subset if e <= t)
    families = []
    if inside_k <= t - 1:
        families.append(1)
    if inside_t == t:
        families.append(2)
    if inside_t == t - 1 and inside_k == t:
        families.append(3)
    return families


def check_lemma5(
    n: int, k: int, t: int, enumeration_cap: int = DEFAULT_ENUMERATION_CAP
) -> ConditionReport:
    """
    Check C(n-t, k-t) + (k-t) t C(n-k, k-t) + sum_{i<t} C(k, i) C(n-k, k-i) <= C(n, k).

    The three terms count disjoint families of k-subsets of [n]: those with
    at most t-1 elements in [k], those containing [t], and those with t-1
    elements of [t] and one more of [k]. When C(n, k) <= enumeration_cap the
    families are also enumerated, and their sizes and disjointness become the
    auxiliary checks "enumeration" and "disjoint".

    Args:
        n (int): n parameter.
        k (int): k parameter.
        t (int): t parameter.
        enumeration_cap (int, optional): largest C(n, k) enumerated. Defaults to DEFAULT_ENUMERATION_CAP.

    Raises:
        InvalidParameters: unless n > k >= t >= 1.

    Returns:
        ConditionReport: the report.
    """
    if t < 1:
        raise InvalidParameters(ParamConstraint.T_POSITIVE, n, k, t)
    if k < t:
        raise InvalidParameters(ParamConstraint.K_AT_LEAST_T, n, k, t)
    if n <= k:
        raise InvalidParameters(ParamConstraint.N_GREATER_THAN_K, n, k, t)

    sizes = (
        sum(binom(k, i) * binom(n - k, k - i) for i in range(t)),
        binom(n - t, k - t),
        (k - t) * t * binom(n - k, k - t),
    )
    checks = {}
    details = {"families": list(sizes)}
    if binom(n, k) <= enumeration_cap:
        counted = [0, 0, 0]
        overlaps = 0
        for subset in combinations(range(1, n + 1), k):
            families = _classify(subset, k, t)
            overlaps += max(0, len(families) - 1)
            for family in families:
                counted[family - 1] += 1
        checks["enumeration"] = tuple(counted) == sizes
        checks["disjoint"] = overlaps == 0
        details["enumerated"] = counted
    return ConditionReport.evaluate(
        ConditionId.LEMMA5,
        sum(sizes),
        binom(n, k),
        Relation.LE,
        {"n": n, "k": k, "t": t, "enumeration_cap": enumeration_cap},
        checks=checks,
        details=details,
    )


@dataclass(frozen=True)
class FProfile:
    """
    Values f(r) = C(k-r, t-r) C(n-2t+r, k-2t+r) for r = 0..t-1.
    """

    values: Tuple[int, ...]
    monotone: bool  #: True if f(0) <= f(1) <= ... <= f(t-1).
    hypothesis: bool  #: True if n >= t + (k+1-t)(k-t)/2, which forces monotone.


def f_hypothesis(n: int, k: int, t: int) -> bool:
    """
    Args:
        n (int): n parameter.
        k (int): k parameter.
        t (int): t parameter.

    Returns:
        bool: True if n >= t + (k+1-t)(k-t)/2.
    """
    return 2 * (n - t) >= (k + 1 - t) * (k - t)


def f_profile(n: int, k: int, t: int) -> FProfile:
    """
    Profile of f(r) = C(k-r, t-r) C(n-2t+r, k-2t+r), r = 0..t-1.

    Args:
        n (int): n parameter.
        k (int): k parameter.
        t (int): t parameter.

    Raises:
        InvalidParameters: unless k > t >= 1.

    Returns:
        FProfile: the values and whether they are non-decreasing.
    """
    _require_k_greater_than_t(n, k, t)
    values = tuple(binom(k - r, t - r) * binom(n - 2 * t + r, k - 2 * t + r) for r in range(t))
    monotone = all(a <= b for a, b in zip(values, values[1:]))
    return FProfile(values, monotone, f_hypothesis(n, k, t))


def check_f_monotone(n: int, k: int, t: int) -> ConditionReport:
    """
    Report form of :func:`f_profile`: the smallest increment of f is >= 0.

    Args:
        n (int): n parameter.
        k (int): k parameter.
        t (int): t parameter.

    Returns:
        ConditionReport: the report, with the hypothesis in the details.
    """
    profile = f_profile(n, k, t)
    increments = [b - a for a, b in zip(profile.values, profile.values[1:])]
    return ConditionReport.evaluate(
        ConditionId.F_MONOTONE,
        min(increments, default=0),
        0,
        Relation.GE,
        {"n": n, "k": k, "t": t},
        details={"values": list(profile.values), "hypothesis": profile.hypothesis},
    )


def check_degree_bound(n: int, k: int, t: int) -> ConditionReport:
    """
    Check that the degree of K(n, k, t) is at most
    C(n, k) - C(n-t, k-t) - (k-t) t C(n-k, k-t).

    Args:
        n (int): n parameter.
        k (int): k parameter.
        t (int): t parameter.

    Raises:
        InvalidParameters: if (n, k, t) are not parameters of a Kneser graph.

    Returns:
        ConditionReport: the report.
    """
    params = validate_params(n, k, t)
    bound = binom(n, k) - binom(n - t, k - t) - (k - t) * t * binom(n - k, k - t)
    return ConditionReport.evaluate(
        ConditionId.DEGREE_BOUND,
        max_degree_formula(params),
        bound,
        Relation.LE,
        params.as_dict(),
    )


def check_theorem9(n: int, k: int, t: int) -> List[ConditionReport]:
    """
    The three sufficient conditions for tw(K(n, k, t)) = C(n, k) - C(n-t, k-t) - 1:

    * eqns1: n >= (t+1)(k+1-t),
    * eqns2: n >= t + (k+1-t)(k-t)/2,
    * eqns3: C(n-t, k-t)/3 >= :func:`intersection_sum` up to min(t, k-t).

    Args:
        n (int): n parameter.
        k (int): k parameter.
        t (int): t parameter.

    Raises:
        InvalidParameters: unless k > t > 0.

    Returns:
        List[ConditionReport]: one report per condition.
    """
    _require_k_greater_than_t(n, k, t)
    params = {"n": n, "k": k, "t": t}
    return [
        ConditionReport.evaluate(
            ConditionId.EQNS1, n, (t + 1) * (k + 1 - t), Relation.GE, dict(params)
        ),
        ConditionReport.evaluate(
            ConditionId.EQNS2,
            n,
            t + Fraction((k + 1 - t) * (k - t), 2),
            Relation.GE,
            dict(params),
        ),
        ConditionReport.evaluate(
            ConditionId.EQNS3,
            Fraction(binom(n - t, k - t), 3),
            intersection_sum(n, k, t, min(t, k - t)),
            Relation.GE,
            dict(params),
        ),
    ]


def treewidth_formula_guaranteed(reports: List[ConditionReport]) -> bool:
    """
    Args:
        reports (List[ConditionReport]): output of :func:`check_theorem9`.

    Returns:
        bool: True if every condition holds, so that the treewidth formula is proved.
    """
    return bool(reports) and all(report.holds for report in reports)


def check_lemma8_separator_bound(
    n: int,
    k: int,
    t: int,
    p: Union[Fraction, int, str] = Fraction(2, 3),
    separator_cap: int = DEFAULT_SEPARATOR_MAX_VERTICES,
) -> ConditionReport:
    """
    Check (1-p) C(n-t, k-t) >= :func:`intersection_sum` up to t, under which
    every p-separator of K(n, k, t) has at least C(n, k) - C(n-t, k-t) vertices.

    The two side hypotheses n >= (t+1)(k+1-t) and n >= t + (k+1-t)(k-t)/2 are
    auxiliary checks. When all hypotheses hold and C(n, k) <= separator_cap,
    the conclusion is cross-checked with an exhaustive separator search.

    Args:
        n (int): n parameter.
        k (int): k parameter.
        t (int): t parameter.
        p (Union[Fraction, int, str], optional): the balance. Defaults to 2/3.
        separator_cap (int, optional): largest graph searched. Defaults to DEFAULT_SEPARATOR_MAX_VERTICES.

    Raises:
        OutOfRange: if p is not in [2/3, 1).
        InvalidParameters: unless k > t > 0.

    Returns:
        ConditionReport: the report.
    """
    value = check_p(p)
    _require_k_greater_than_t(n, k, t)
    full_sum = intersection_sum(n, k, t, t)
    checks = {
        "eqns1": n >= (t + 1) * (k + 1 - t),
        "eqns2": f_hypothesis(n, k, t),
        "sum-limit": full_sum == intersection_sum(n, k, t, min(t, k - t)),
    }
    report = ConditionReport.evaluate(
        ConditionId.LEMMA8,
        (1 - value) * binom(n - t, k - t),
        full_sum,
        Relation.GE,
        {"n": n, "k": k, "t": t, "p": value, "separator_cap": separator_cap},
        checks=checks,
    )
    if report.passed and binom(n, k) <= separator_cap:
        graph = build_graph(validate_params(n, k, t))
        separator = min_balanced_separator(graph, value, separator_cap).size
        report.checks["separator"] = separator >= binom(n, k) - binom(n - t, k - t)
        report.details["separator_size"] = separator
    return report
