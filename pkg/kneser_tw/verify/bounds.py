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
Comparison of two sufficient thresholds on n for the treewidth formula.

* the binomial threshold 2(k-t)(t+1)C(k,t) + k + t + 1,
* the cubic threshold t + 6k(k+1-t)(k-t) for 2 <= t <= 16 and
  t + (t-1)k(k+1-t)(k-t)/ln t for t >= 17.

The cubic threshold also exists without its additive t; both variants are
reported.
"""
import logging
from fractions import Fraction
from typing import Union

from kneser_tw.combinatorics import RationalInterval, binom, ln_enclosure
from kneser_tw.exceptions import InvalidParameters, OutOfRange, ParamConstraint
from kneser_tw.verify.cases import DEFAULT_LN_EPS, LAST_SMALL_T
from kneser_tw.verify.reports import ConditionId, ConditionReport, Relation

logger = logging.getLogger(__name__)


def binomial_threshold(k: int, t: int) -> int:
    """
    Args:
        k (int): k parameter.
        t (int): t parameter.

    Returns:
        int: 2(k-t)(t+1)C(k,t) + k + t + 1.
    """
    return 2 * (k - t) * (t + 1) * binom(k, t) + k + t + 1


def cubic_threshold(k: int, t: int, eps: Union[Fraction, int, str] = DEFAULT_LN_EPS) -> RationalInterval:
    """
    Enclosure of the cubic threshold, without its additive t.

    Args:
        k (int): k parameter.
        t (int): t parameter, at least 2.
        eps (Union[Fraction, int, str], optional): width of the ln enclosure. Defaults to DEFAULT_LN_EPS.

    Returns:
        RationalInterval: 6k(k+1-t)(k-t) exactly for t <= 16, else an enclosure of (t-1)k(k+1-t)(k-t)/ln t.
    """
    cubic = k * (k + 1 - t) * (k - t)
    if t <= LAST_SMALL_T:
        return RationalInterval.point(6 * cubic)
    ln_t = ln_enclosure(t, Fraction(eps))
    numerator = (t - 1) * cubic
    return RationalInterval(numerator / ln_t.hi, numerator / ln_t.lo)


def compare_bounds(k: int, t: int, eps: Union[Fraction, int, str] = DEFAULT_LN_EPS) -> ConditionReport:
    """
    Check that the cubic threshold (with its additive t) is at most the
    binomial one. For t >= 17 the upper end of the enclosure is used, so a
    verdict "holds" is conservative.

    Args:
        k (int): k parameter.
        t (int): t parameter.
        eps (Union[Fraction, int, str], optional): width of the ln enclosure. Defaults to DEFAULT_LN_EPS.

    Raises:
        InvalidParameters: if k <= t.
        OutOfRange: if t < 2.

    Returns:
        ConditionReport: the report, with both variants and the ratio in the details.
    """
    if k <= t:
        raise InvalidParameters(ParamConstraint.K_GREATER_THAN_T, 0, k, t)
    if t < 2:
        raise OutOfRange("t", t, ">= 2")
    eps = Fraction(eps)
    binomial = binomial_threshold(k, t)
    cubic = cubic_threshold(k, t, eps)
    with_t = cubic.hi + t
    params = {"k": k, "t": t}
    if t > LAST_SMALL_T:
        params["eps"] = eps
    return ConditionReport.evaluate(
        ConditionId.LIU_BOUND,
        with_t,
        binomial,
        Relation.LE,
        params,
        details={
            "cubic_with_t": with_t,
            "cubic_without_t": cubic.hi,
            "cubic_lo": cubic.lo + t,
            "ratio": with_t / binomial,
        },
    )
