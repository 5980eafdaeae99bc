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
Binomial coefficients and falling factorials on python integers.

Binomials follow the zero convention: C(a, b) = 0 outside of the Pascal
triangle. The sums of the treewidth inequalities rely on it, for instance the
summation limits min{t, k-t} and t give the same value because the extra
terms vanish.
"""
import math


def binom(a: int, b: int) -> int:
    """
    Binomial coefficient C(a, b) with the zero convention.

    Args:
        a (int): upper index.
        b (int): lower index.

    Returns:
        int: C(a, b) if 0 <= b <= a, 0 otherwise.
    """
    if a < 0 or b < 0 or b > a:
        return 0
    return math.comb(a, b)


def falling_factorial(x: int, m: int) -> int:
    """
    Falling factorial x (x-1) ... (x-m+1), the empty product being 1.

    Quotients like (t-1)!/(t-s)! are computed this way, without forming the
    large factorials.

    Args:
        x (int): first factor.
        m (int): number of factors.

    Raises:
        ValueError: if m is negative.

    Returns:
        int: the product.
    """
    if m < 0:
        raise ValueError(f"The number of factors must be non-negative (m = {m}).")
    return math.perm(x, m) if x >= 0 else _signed_falling_factorial(x, m)


def _signed_falling_factorial(x: int, m: int) -> int:
    result = 1
    for i in range(m):
        result *= x - i
    return result
