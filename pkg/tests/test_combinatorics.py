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
Tests of the exact combinatorics: binomials, colex ranks, enclosures.
"""
import math
from fractions import Fraction
from itertools import combinations

import pytest
from hypothesis import given, strategies as st

from kneser_tw.combinatorics import (
    KSubset,
    RationalInterval,
    binom,
    colex_rank,
    colex_unrank,
    exp_enclosure,
    falling_factorial,
    iter_colex,
    ln_enclosure,
)
from kneser_tw.exceptions import InvalidSubset, OutOfRange
from tests.strategies import rationals, subsets


def test_binom_small_values():
    assert binom(5, 2) == 10
    assert binom(0, 0) == 1
    assert all(binom(n, 0) == 1 for n in range(50))


def test_binom_zero_convention():
    assert binom(3, 5) == 0
    assert binom(3, -1) == 0
    assert binom(-2, 1) == 0


def test_binom_pascal_recurrence():
    for a in range(2, 61):
        for b in range(1, a):
            assert binom(a, b) == binom(a - 1, b - 1) + binom(a - 1, b)


def test_binom_symmetry():
    for a in range(61):
        for b in range(a + 1):
            assert binom(a, b) == binom(a, a - b)


def test_binom_eqns3_sides_at_36_3_2():
    assert Fraction(binom(34, 1), 3) == Fraction(34, 3)
    assert Fraction(34, 3) >= 4


def test_falling_factorial():
    assert falling_factorial(5, 2) == 20
    assert falling_factorial(5, 0) == 1
    assert falling_factorial(3, 5) == 0
    assert falling_factorial(-2, 2) == 6
    with pytest.raises(ValueError):
        falling_factorial(4, -1)


def test_ksubset_normalizes():
    s = KSubset.of([3, 1, 2], n=6)
    assert s.elements == (1, 2, 3)
    assert s.k == 3
    assert str(s) == "{1,2,3}"
    assert KSubset.of([1, 3], n=4).mask == 0b101


@pytest.mark.parametrize(
    "elements, n",
    [((), 3), ((2, 1), 3), ((0, 1), 3), ((1, 4), 3)],
)
def test_ksubset_rejects_malformed(elements, n):
    with pytest.raises(InvalidSubset):
        KSubset(elements, n)


def test_ksubset_rejects_repeated():
    with pytest.raises(InvalidSubset):
        KSubset.of([1, 1, 2], n=4)


def test_colex_rank_examples():
    assert colex_rank(KSubset((1, 2, 3), 6)) == 0
    assert colex_rank(KSubset((4, 5, 6), 6)) == 19
    assert colex_rank(KSubset((1, 4), 5)) == 3


def test_colex_unrank_examples():
    assert colex_unrank(0, 3, 6) == KSubset((1, 2, 3), 6)
    assert colex_unrank(19, 3, 6) == KSubset((4, 5, 6), 6)


def test_colex_round_trip_on_three_subsets_of_seven():
    for elements in combinations(range(1, 8), 3):
        s = KSubset(elements, 7)
        assert colex_unrank(colex_rank(s), 3, 7) == s


def test_colex_unrank_is_a_bijection():
    subsets_of_rank = {colex_unrank(r, 3, 7) for r in range(binom(7, 3))}
    assert len(subsets_of_rank) == 35


def test_iter_colex_follows_ranks():
    assert [colex_rank(s) for s in iter_colex(7, 3)] == list(range(35))


@pytest.mark.parametrize("n", range(1, 13))
def test_colex_round_trip_up_to_twelve(n):
    for k in range(1, n + 1):
        for r in range(binom(n, k)):
            s = colex_unrank(r, k, n)
            assert (s.n, s.k) == (n, k)
            assert colex_rank(s) == r


def test_colex_unrank_out_of_range():
    with pytest.raises(OutOfRange):
        colex_unrank(20, 3, 6)
    with pytest.raises(OutOfRange):
        colex_unrank(-1, 3, 6)
    with pytest.raises(OutOfRange):
        colex_unrank(0, 7, 6)


@given(subsets())
def test_colex_rank_is_in_range_and_invertible(data):
    n, elements = data
    s = KSubset(elements, n)
    rank = colex_rank(s)
    assert 0 <= rank < binom(n, s.k)
    assert colex_unrank(rank, s.k, n) == s


def test_ln_enclosure_of_24():
    interval = ln_enclosure(24, Fraction(1, 10**6))
    assert interval.width <= Fraction(1, 10**6)
    assert interval.lo <= Fraction(math.log(24)) + Fraction(1, 10**12)
    assert interval.hi >= Fraction(math.log(24)) - Fraction(1, 10**12)
    assert Fraction(3178, 1000) < interval.lo
    assert interval.hi < Fraction(3179, 1000)


def test_ln_enclosure_cross_checked_with_exp():
    interval = ln_enclosure(24, Fraction(1, 10**6))
    tiny = Fraction(1, 10**12)
    assert exp_enclosure(interval.lo, tiny).lo <= 24 <= exp_enclosure(interval.hi, tiny).hi


def test_ln_enclosure_of_2():
    interval = ln_enclosure(2, Fraction(1, 1000))
    margin = Fraction(1, 10**12)
    assert interval.lo - margin <= Fraction(math.log(2)) <= interval.hi + margin
    assert interval.width <= Fraction(1, 1000)


def test_ln_enclosures_are_ordered():
    eps = Fraction(1, 10**6)
    assert ln_enclosure(17, eps).hi < ln_enclosure(23, eps).lo + Fraction(31, 100)
    assert ln_enclosure(17, eps).hi < ln_enclosure(18, eps).lo


@given(st.integers(min_value=2, max_value=10**6))
def test_ln_enclosure_contains_log(t):
    interval = ln_enclosure(t, Fraction(1, 10**6))
    margin = Fraction(1, 10**9)
    assert interval.lo - margin <= Fraction(math.log(t)) <= interval.hi + margin
    assert interval.width <= Fraction(1, 10**6)


def test_ln_enclosure_rejects_bad_arguments():
    with pytest.raises(OutOfRange):
        ln_enclosure(1, Fraction(1, 10))
    with pytest.raises(OutOfRange):
        ln_enclosure(5, 0)


def test_exp_enclosure_of_one_and_minus_one():
    eps = Fraction(1, 10**9)
    margin = Fraction(1, 10**12)
    e = exp_enclosure(1, eps)
    assert e.width <= eps
    assert e.lo - margin <= Fraction(math.e) <= e.hi + margin
    inverse = exp_enclosure(-1, eps)
    assert inverse.lo - margin <= Fraction(1 / math.e) <= inverse.hi + margin
    assert 1 in exp_enclosure(0, eps)


def test_rational_interval_arithmetic():
    a = RationalInterval(Fraction(1), Fraction(2))
    b = RationalInterval(Fraction(-1), Fraction(3))
    assert a + b == RationalInterval(0, 5)
    assert a + 1 == RationalInterval(2, 3)
    assert a * b == RationalInterval(-2, 6)
    assert 2 * a == RationalInterval(2, 4)
    assert b.square() == RationalInterval(0, 9)
    assert RationalInterval(-3, -2).square() == RationalInterval(4, 9)
    assert a.width == 1
    with pytest.raises(ValueError):
        RationalInterval(2, 1)


@given(rationals, rationals, rationals, rationals, st.fractions(0, 1), st.fractions(0, 1))
def test_rational_interval_product_encloses(a, b, c, d, lam, mu):
    first = RationalInterval(min(a, b), max(a, b))
    second = RationalInterval(min(c, d), max(c, d))
    x = first.lo + lam * first.width
    y = second.lo + mu * second.width
    assert x * y in first * second
    assert x + y in first + second
    assert x * x in first.square()


nonzero = st.integers(min_value=-10**6, max_value=10**6).filter(bool)


@given(st.integers(), nonzero, st.integers(), nonzero)
def test_rational_sum_is_exact(p, q, r, s):
    assert (Fraction(p, q) + Fraction(r, s)) * q * s == p * s + r * q
