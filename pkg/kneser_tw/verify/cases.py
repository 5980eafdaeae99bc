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
Case analysis for the cubic threshold on n.

Writing c for the ratio that the threshold bounds, a failure of the treewidth
formula forces

    (t-1)/3 <= sum over s = 1..t of c^s / ((s-1)! s! s!).

The sum increases with c > 0, so a single evaluation at the largest
admissible c decides each t: c = (t-1)/6 for 2 <= t <= 16 and c = ln t for
17 <= t <= 23, where ln t is replaced by the upper end of a certified
enclosure. For t >= 24 the bound reduces to t - 1 <= 4 ln t + (ln t)^2, which
is refuted with enclosures together with a certificate that the gap keeps
growing.
"""
import logging
import math
from fractions import Fraction
from functools import lru_cache
from typing import Union

from kneser_tw.combinatorics import RationalInterval, ln_enclosure
from kneser_tw.exceptions import OutOfRange
from kneser_tw.verify.reports import ConditionId, ConditionReport, Relation

logger = logging.getLogger(__name__)

DEFAULT_LN_EPS = Fraction(1, 10**6)  #: Default width of the ln enclosures.
DEFAULT_HORIZON = 200  #: Default last t of the growth certificate.
LAST_SMALL_T = 16  #: Last t decided at c = (t-1)/6.
FIRST_TAIL_T = 24  #: First t decided by the tail bound.


def case_sum(c: Fraction, t: int) -> Fraction:
    """
    Sum over s = 1..t of c^s / ((s-1)! s! s!).

    Args:
        c (Fraction): the ratio.
        t (int): last value of s.

    Returns:
        Fraction: the sum, exactly.
    """
    c = Fraction(c)
    return sum(
        (c**s / (math.factorial(s - 1) * math.factorial(s) ** 2) for s in range(1, t + 1)),
        Fraction(0),
    )


@lru_cache(maxsize=None)
def _ln(t: int, eps: Fraction) -> RationalInterval:
    return ln_enclosure(t, eps)


def _tail_bound(ln_t: RationalInterval) -> RationalInterval:
    """Enclosure of 4 ln t + (ln t)^2."""
    return 4 * ln_t + ln_t.square()


def _gap(t: int, eps: Fraction) -> RationalInterval:
    """Enclosure of t - 1 - 4 ln t - (ln t)^2."""
    return -1 * _tail_bound(_ln(t, eps)) + (t - 1)


def check_corollary14_cases(
    t: int,
    eps: Union[Fraction, int, str] = DEFAULT_LN_EPS,
    horizon: int = DEFAULT_HORIZON,
) -> ConditionReport:
    """
    Decide the case of t in the case analysis.

    * 2 <= t <= 16 (case1): sum at c = (t-1)/6 is < (t-1)/3.
    * 17 <= t <= 23 (case2): sum at c = hi(ln t) is < (t-1)/3.
    * t >= 24 (tail24): hi(4 ln t + (ln t)^2) < t - 1. The auxiliary check
      "derivative" certifies (4 + 2 hi(ln t))/t < 1, so the gap
      t - 1 - 4 ln t - (ln t)^2 increases from t on, and "horizon" checks
      that the enclosed gap strictly grows at every step up to horizon.

    Args:
        t (int): the value of t.
        eps (Union[Fraction, int, str], optional): width of the ln enclosures. Defaults to DEFAULT_LN_EPS.
        horizon (int, optional): last t of the growth check. Defaults to DEFAULT_HORIZON.

    Raises:
        OutOfRange: if t < 2.

    Returns:
        ConditionReport: the report.
    """
    if t < 2:
        raise OutOfRange("t", t, ">= 2")
    eps = Fraction(eps)
    bound = Fraction(t - 1, 3)

    if t <= LAST_SMALL_T:
        c = Fraction(t - 1, 6)
        return ConditionReport.evaluate(
            ConditionId.CASE1,
            case_sum(c, t),
            bound,
            Relation.LT,
            {"t": t},
            details={"c": c},
        )

    ln_t = _ln(t, eps)
    if t < FIRST_TAIL_T:
        return ConditionReport.evaluate(
            ConditionId.CASE2,
            case_sum(ln_t.hi, t),
            bound,
            Relation.LT,
            {"t": t, "eps": eps},
            details={"ln_lo": ln_t.lo, "ln_hi": ln_t.hi},
        )

    tail = _tail_bound(ln_t)
    growing = all(_gap(s, eps).hi < _gap(s + 1, eps).lo for s in range(t, horizon))
    return ConditionReport.evaluate(
        ConditionId.TAIL24,
        tail.hi,
        t - 1,
        Relation.LT,
        {"t": t, "eps": eps, "horizon": horizon},
        checks={
            "derivative": (4 + 2 * ln_t.hi) / t < 1,
            "horizon": growing,
        },
        details={"ln_lo": ln_t.lo, "ln_hi": ln_t.hi, "tail_lo": tail.lo},
    )
