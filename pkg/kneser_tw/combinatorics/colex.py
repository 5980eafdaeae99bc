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
k-subsets of [n] = {1, ..., n} and their colexicographic ranks.

The colex rank of {s_1 < ... < s_k} is the sum of C(s_i - 1, i). It does not
depend on n, so the first C(m, k) ranks are always the k-subsets of [m].
"""
from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Iterator, Tuple

from kneser_tw.combinatorics.binomial import binom
from kneser_tw.exceptions import InvalidSubset, OutOfRange


@dataclass(frozen=True)
class KSubset:
    """
    A k-subset of [n], stored as a strictly increasing tuple.

    Example:

    .. code-block:: python

        s = KSubset.of([3, 1, 2], n=6)
        s.elements # (1, 2, 3)
        colex_rank(s) # 0
    """

    elements: Tuple[int, ...]  #: Sorted elements, each in [1, n].
    n: int  #: Size of the ambient set.

    def __post_init__(self) -> None:
        if len(self.elements) < 1:
            raise InvalidSubset("A k-subset must have at least one element.")
        if any(b <= a for a, b in zip(self.elements, self.elements[1:])):
            raise InvalidSubset(
                f"Elements must be distinct and sorted (got {self.elements})."
            )
        if self.elements[0] < 1 or self.elements[-1] > self.n:
            raise InvalidSubset(f"Elements of {self.elements} must lie in [1, {self.n}].")

    @classmethod
    def of(cls, elements: Iterable[int], n: int) -> "KSubset":
        """
        Build a subset from any iterable of distinct elements.

        Args:
            elements (Iterable[int]): the elements, in any order.
            n (int): size of the ambient set.

        Raises:
            InvalidSubset: if an element is repeated or out of [1, n].

        Returns:
            KSubset: the subset.
        """
        items = list(elements)
        if len(set(items)) != len(items):
            raise InvalidSubset(f"Repeated element in {items}.")
        return cls(tuple(sorted(items)), n)

    @property
    def k(self) -> int:
        """Number of elements."""
        return len(self.elements)

    @property
    def mask(self) -> int:
        """Bitmask with bit e-1 set for every element e."""
        result = 0
        for element in self.elements:
            result |= 1 << (element - 1)
        return result

    def __iter__(self) -> Iterator[int]:
        return iter(self.elements)

    def __len__(self) -> int:
        return len(self.elements)

    def __str__(self) -> str:
        return "{" + ",".join(str(e) for e in self.elements) + "}"


def colex_rank(s: KSubset) -> int:
    """
    Colexicographic rank (0-based) of a k-subset.

    Args:
        s (KSubset): the subset.

    Returns:
        int: sum over i of C(s_i - 1, i), in [0, C(n, k)).
    """
    return sum(binom(element - 1, i) for i, element in enumerate(s.elements, start=1))


def colex_unrank(r: int, k: int, n: int) -> KSubset:
    """
    The k-subset of [n] of colex rank r.

    Args:
        r (int): the rank.
        k (int): size of the subset.
        n (int): size of the ambient set.

    Raises:
        OutOfRange: if k is not in [1, n] or r is not in [0, C(n, k)).

    Returns:
        KSubset: the subset with colex_rank equal to r.
    """
    if not 1 <= k <= n:
        raise OutOfRange("k", k, f"[1, {n}]")
    total = binom(n, k)
    if not 0 <= r < total:
        raise OutOfRange("rank", r, f"[0, {total})")
    elements = []
    upper = n - 1
    for i in range(k, 0, -1):
        # largest x with C(x, i) <= r
        x = upper
        while binom(x, i) > r:
            x -= 1
        elements.append(x + 1)
        r -= binom(x, i)
        upper = x - 1
    return KSubset(tuple(reversed(elements)), n)


def iter_colex(n: int, k: int) -> Iterator[KSubset]:
    """
    Iterate over the k-subsets of [n] in colex order.

    Args:
        n (int): size of the ambient set.
        k (int): size of the subsets.

    Yields:
        KSubset: subsets of rank 0, 1, ..., C(n, k) - 1.
    """
    # colex compares the largest elements first
    subsets = sorted(combinations(range(1, n + 1), k), key=lambda c: c[::-1])
    for elements in subsets:
        yield KSubset(elements, n)
