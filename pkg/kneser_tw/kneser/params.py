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
Parameters (n, k, t) of a generalized Kneser graph.
"""
from dataclasses import dataclass
from typing import Dict, List

from kneser_tw.combinatorics import binom
from kneser_tw.exceptions import InvalidParameters, ParamConstraint


@dataclass(frozen=True)
class KneserParams:
    """
    Validated parameters of K(n, k, t): k > t > 0 and n > 2k - t.

    Build them with :func:`validate_params` or directly, both validate.
    """

    n: int  #: Size of the ground set [n].
    k: int  #: Size of the vertices (k-subsets).
    t: int  #: Two vertices are adjacent if they share fewer than t elements.

    def __post_init__(self) -> None:
        if self.k <= self.t:
            raise InvalidParameters(
                ParamConstraint.K_GREATER_THAN_T, self.n, self.k, self.t
            )
        if self.t <= 0:
            raise InvalidParameters(ParamConstraint.T_POSITIVE, self.n, self.k, self.t)
        if self.n <= 2 * self.k - self.t:
            raise InvalidParameters(
                ParamConstraint.N_GREATER_THAN_2K_MINUS_T, self.n, self.k, self.t
            )

    @property
    def num_vertices(self) -> int:
        """C(n, k)."""
        return binom(self.n, self.k)

    @property
    def pencil_size(self) -> int:
        """C(n-t, k-t), the size of a point pencil."""
        return binom(self.n - self.t, self.k - self.t)

    @property
    def wilson_bound(self) -> int:
        """(t+1)(k+1-t): from this n on, point pencils are maximum independent sets."""
        return (self.t + 1) * (self.k + 1 - self.t)

    @property
    def in_wilson_range(self) -> bool:
        """True if n >= (t+1)(k+1-t)."""
        return self.n >= self.wilson_bound

    def as_dict(self) -> Dict[str, int]:
        """
        Returns:
            Dict[str, int]: {"n": n, "k": k, "t": t}.
        """
        return {"n": self.n, "k": self.k, "t": self.t}

    def __str__(self) -> str:
        return f"K({self.n},{self.k},{self.t})"


def validate_params(n: int, k: int, t: int) -> KneserParams:
    """
    Validate (n, k, t).

    Args:
        n (int): size of the ground set.
        k (int): size of the subsets.
        t (int): intersection threshold.

    Raises:
        InvalidParameters: naming the violated constraint (k>t, t>0 or n>2k-t).

    Returns:
        KneserParams: the validated parameters.
    """
    return KneserParams(n, k, t)


def corpus_params(max_vertices: int) -> List[KneserParams]:
    """
    Every valid (n, k, t) with C(n, k) <= max_vertices, sorted by (n, k, t).

    Args:
        max_vertices (int): cap on the number of vertices.

    Returns:
        List[KneserParams]: the corpus.
    """
    corpus = []
    k = 2
    # the smallest graph for a given k is K(k+2, k, k-1)
    while binom(k + 2, k) <= max_vertices:
        for t in range(1, k):
            n = 2 * k - t + 1
            while binom(n, k) <= max_vertices:
                corpus.append(KneserParams(n, k, t))
                n += 1
        k += 1
    return sorted(corpus, key=lambda p: (p.n, p.k, p.t))
