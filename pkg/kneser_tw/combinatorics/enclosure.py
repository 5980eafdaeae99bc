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
Certified rational enclosures of logarithms and exponentials.

The logarithm uses ln(q) = 2 atanh((q-1)/(q+1)) after a reduction
q = r * 2^m with r in [1, 2). The atanh series is truncated with the
geometric bound on its tail, and the endpoints are then rounded outwards on
a dyadic grid so that their denominators stay small. Every endpoint is an
exact rational: a strict inequality against ln(t) proven with these
intervals is a proof.
"""
import functools
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Union

from kneser_tw.exceptions import OutOfRange

Rational = Union[int, Fraction]


@dataclass(frozen=True)
class RationalInterval:
    """
    Closed interval [lo, hi] with rational endpoints.
    """

    lo: Fraction  #: Lower endpoint.
    hi: Fraction  #: Upper endpoint.

    def __post_init__(self) -> None:
        object.__setattr__(self, "lo", Fraction(self.lo))
        object.__setattr__(self, "hi", Fraction(self.hi))
        if self.lo > self.hi:
            raise ValueError(f"Empty interval [{self.lo}, {self.hi}].")

    @classmethod
    def point(cls, value: Rational) -> "RationalInterval":
        """
        Degenerate interval [value, value].

        Args:
            value (Rational): the value.

        Returns:
            RationalInterval: the interval.
        """
        return cls(Fraction(value), Fraction(value))

    @property
    def width(self) -> Fraction:
        """hi - lo."""
        return self.hi - self.lo

    def __contains__(self, value: Rational) -> bool:
        return self.lo <= value <= self.hi

    def __add__(self, other: Union["RationalInterval", Rational]) -> "RationalInterval":
        if isinstance(other, RationalInterval):
            return RationalInterval(self.lo + other.lo, self.hi + other.hi)
        return RationalInterval(self.lo + other, self.hi + other)

    __radd__ = __add__

    def __mul__(self, other: Union["RationalInterval", Rational]) -> "RationalInterval":
        if not isinstance(other, RationalInterval):
            other = RationalInterval.point(other)
        corners = (
            self.lo * other.lo,
            self.lo * other.hi,
            self.hi * other.lo,
            self.hi * other.hi,
        )
        return RationalInterval(min(corners), max(corners))

    __rmul__ = __mul__

    def square(self) -> "RationalInterval":
        """
        Tight enclosure of x^2 for x in the interval.

        Returns:
            RationalInterval: the square.
        """
        if self.lo >= 0:
            return RationalInterval(self.lo**2, self.hi**2)
        if self.hi <= 0:
            return RationalInterval(self.hi**2, self.lo**2)
        return RationalInterval(Fraction(0), max(self.lo**2, self.hi**2))

    def __str__(self) -> str:
        return f"[{self.lo}, {self.hi}]"


def _dyadic_grid(tol: Fraction) -> int:
    denominator = 1
    while Fraction(1, denominator) > tol / 4:
        denominator *= 2
    return denominator


def _round_outward(lo: Fraction, hi: Fraction, denominator: int) -> RationalInterval:
    return RationalInterval(
        Fraction(math.floor(lo * denominator), denominator),
        Fraction(math.ceil(hi * denominator), denominator),
    )


def _two_atanh(x: Fraction, tol: Fraction) -> RationalInterval:
    """Enclosure of 2 atanh(x) for 0 <= x < 1, of width at most tol."""
    if x == 0:
        return RationalInterval.point(0)
    x_squared = x * x
    tail_factor = 1 / (1 - x_squared)
    power = x
    total = Fraction(0)
    j = 0
    while True:
        total += 2 * power / (2 * j + 1)
        j += 1
        power *= x_squared
        tail = 2 * power / (2 * j + 1) * tail_factor
        if tail <= tol / 2:
            break
    return _round_outward(total, total + tail, _dyadic_grid(tol))


@functools.lru_cache(maxsize=64)
def _ln2(tol: Fraction) -> RationalInterval:
    return _two_atanh(Fraction(1, 3), tol)


def ln_enclosure(t: int, eps: Rational) -> RationalInterval:
    """
    Certified enclosure of ln(t).

    Example:

    .. code-block:: python

        interval = ln_enclosure(24, Fraction(1, 10**6))
        Fraction(3178, 1000) < interval.lo <= interval.hi < Fraction(3179, 1000) # True

    Args:
        t (int): the argument, at least 2.
        eps (Rational): maximal width of the enclosure, positive.

    Raises:
        OutOfRange: if t < 2 or eps <= 0.

    Returns:
        RationalInterval: [lo, hi] with lo <= ln(t) <= hi and hi - lo <= eps.
    """
    if t < 2:
        raise OutOfRange("t", t, "t >= 2")
    eps = Fraction(eps)
    if eps <= 0:
        raise OutOfRange("eps", eps, "eps > 0")
    exponent = t.bit_length() - 1
    reduced = Fraction(t, 2**exponent)
    result = _two_atanh((reduced - 1) / (reduced + 1), eps / 2)
    if exponent:
        result = result + exponent * _ln2(eps / (2 * exponent))
    return result


def exp_enclosure(x: Rational, eps: Rational) -> RationalInterval:
    """
    Certified enclosure of exp(x) for a rational x.

    For x >= 0 the Taylor series is truncated once the tail, bounded by a
    geometric series, is below eps. Negative arguments use exp(x) = 1/exp(-x).

    Args:
        x (Rational): the argument.
        eps (Rational): maximal width of the enclosure, positive.

    Raises:
        OutOfRange: if eps <= 0.

    Returns:
        RationalInterval: [lo, hi] with lo <= exp(x) <= hi and hi - lo <= eps.
    """
    x = Fraction(x)
    eps = Fraction(eps)
    if eps <= 0:
        raise OutOfRange("eps", eps, "eps > 0")
    if x < 0:
        positive = exp_enclosure(-x, eps)
        return RationalInterval(1 / positive.hi, 1 / positive.lo)
    term = Fraction(1)
    total = Fraction(0)
    j = 0
    while True:
        total += term
        j += 1
        term = term * x / j
        if j + 1 > x:
            tail = term / (1 - x / (j + 1))
            if tail <= eps:
                break
    return RationalInterval(total, total + tail)
