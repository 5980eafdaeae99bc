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
Thresholds on k for a fixed difference c = k - t.

Above K(c) the treewidth formula holds for every admissible n. The sharper
K'(c) is found by evaluating, for every k of a window, the inequality

    n - t <= sum over s = 1..c of 3 s C(c, s) C(c+1, s) C(c+s, s) prod_{i<s} (t-i)/(n-t-i)

at t = k - c and the smallest admissible n = (t+1)(c+1). K'(c) is the
smallest k from which it fails for every k of the window.
"""
import logging
import math
from fractions import Fraction
from typing import Optional

from kneser_tw.combinatorics import binom, falling_factorial
from kneser_tw.exceptions import OutOfRange, ThresholdNotFound
from kneser_tw.utils import format_range
from kneser_tw.verify.reports import ThresholdResult, ThresholdVerdict

logger = logging.getLogger(__name__)


def compute_K(c: int) -> Fraction:  # pylint: disable=invalid-name
    """
    K(c) = c - 1 + 3 sum_{s=1}^{c} C(c-1, s-1) C(c+1, s) C(c+s, s) / c^(s-1).

    Args:
        c (int): the difference k - t.

    Raises:
        OutOfRange: if c < 1.

    Returns:
        Fraction: K(c), exactly.
    """
    if c < 1:
        raise OutOfRange("c", c, ">= 1")
    total = sum(
        Fraction(binom(c - 1, s - 1) * binom(c + 1, s) * binom(c + s, s), c ** (s - 1))
        for s in range(1, c + 1)
    )
    return c - 1 + 3 * total


def default_window(c: int) -> range:
    """
    Args:
        c (int): the difference k - t.

    Returns:
        range: k from 2c+1 to 4 ceil(K(c)).
    """
    return range(2 * c + 1, 4 * math.ceil(compute_K(c)) + 1)


def threshold_verdict(c: int, k: int) -> ThresholdVerdict:
    """
    Evaluate the threshold inequality at k, t = k - c and n = (t+1)(c+1).

    The products (t-1)!/(t-s)! (n-t-s)!/(n-t-1)! are evaluated as ratios of
    falling factorials.

    Args:
        c (int): the difference k - t.
        k (int): the value of k.

    Returns:
        ThresholdVerdict: the verdict.
    """
    t = k - c
    n = (t + 1) * (c + 1)
    rhs = sum(
        Fraction(
            3 * s * binom(c, s) * binom(c + 1, s) * binom(c + s, s) * falling_factorial(t - 1, s - 1),
            falling_factorial(n - t - 1, s - 1),
        )
        for s in range(1, c + 1)
    )
    lhs = Fraction(n - t)
    # each factor (t-i)/(n-t-i) is non-negative and non-increasing in n
    n_monotone = all(t - i >= 0 and n - t - i > 0 for i in range(1, c))
    return ThresholdVerdict(k=k, t=t, n=n, lhs=lhs, rhs=rhs, fails=lhs > rhs, n_monotone=n_monotone)


def compute_Kprime(  # pylint: disable=invalid-name
    c: int, k_window: Optional[range] = None
) -> ThresholdResult:
    """
    Smallest k of the window from which the threshold inequality fails for every k.

    Args:
        c (int): the difference k - t.
        k_window (range, optional): searched values of k, containing 2c+1..4 ceil(K(c)). Defaults to exactly that.

    Raises:
        OutOfRange: if c < 1 or if the window is too small.
        ThresholdNotFound: if the inequality holds at the top of the window.

    Returns:
        ThresholdResult: K'(c) with the verdict of every k.
    """
    k_of_c = compute_K(c)
    required = default_window(c)
    window = required if k_window is None else k_window
    if window.step != 1 or window.start > required.start or window.stop < required.stop:
        raise OutOfRange("k window", format_range(window), f"must contain {format_range(required)}")

    log = [threshold_verdict(c, k) for k in window]
    k_prime = None
    for verdict in reversed(log):
        if not verdict.fails:
            break
        k_prime = verdict.k
    if k_prime is None:
        raise ThresholdNotFound(c, window)
    result = ThresholdResult(c=c, k_of_c=k_of_c, k_prime=k_prime, window=window, search_log=log)
    if not result.monotone_in_k:
        logger.warning("The threshold test for c=%i is not monotone in k.", c)
    logger.info("%s", str(result))
    return result
