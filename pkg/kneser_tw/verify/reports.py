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
Self-describing verification reports.

Every check records its exact left and right hand sides, the relation between
them and the parameters it was evaluated at, so that the verdict can be
recomputed from the report alone.
"""
import operator
from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from typing import Any, Callable, Dict, List

from kneser_tw.utils import format_range


class ConditionId(str, Enum):
    """
    Identifiers of the checks.
    """

    EQNS1 = "eqns1"  #: n >= (t+1)(k+1-t).
    EQNS2 = "eqns2"  #: n >= t + (k+1-t)(k-t)/2.
    EQNS3 = "eqns3"  #: C(n-t, k-t)/3 >= intersection sum up to min(t, k-t).
    LEMMA5 = "lemma5"  #: Disjoint families of k-subsets fit in C(n, k).
    LEMMA8 = "lemma8"  #: (1-p) C(n-t, k-t) >= intersection sum up to t.
    F_MONOTONE = "f-monotone"  #: The profile f is non-decreasing.
    DEGREE_BOUND = "degree-bound"  #: Degree bound derived from the disjoint families.
    THRESHOLD = "threshold"  #: K'(c) <= K(c).
    CASE1 = "case1"  #: 2 <= t <= 16.
    CASE2 = "case2"  #: 17 <= t <= 23.
    TAIL24 = "tail24"  #: t >= 24.
    LIU_BOUND = "liu-bound"  #: The cubic threshold on n is at most the binomial one.


class Relation(str, Enum):
    """
    Comparison between lhs and rhs.
    """

    LT = "<"
    LE = "<="
    EQ = "=="
    GE = ">="
    GT = ">"

    def compare(self, lhs: Fraction, rhs: Fraction) -> bool:
        """
        Args:
            lhs (Fraction): left hand side.
            rhs (Fraction): right hand side.

        Returns:
            bool: whether lhs <relation> rhs.
        """
        return _OPERATORS[self](lhs, rhs)


_OPERATORS: Dict[Relation, Callable[[Any, Any], bool]] = {
    Relation.LT: operator.lt,
    Relation.LE: operator.le,
    Relation.EQ: operator.eq,
    Relation.GE: operator.ge,
    Relation.GT: operator.gt,
}


@dataclass
class ConditionReport:
    """
    Verdict of one check.

    holds is the comparison of lhs and rhs. The auxiliary checks (enumeration
    cross-checks, side hypotheses) are kept apart in checks; the report passes
    when the comparison holds and every auxiliary check does.
    """

    condition: ConditionId
    holds: bool
    lhs: Fraction
    rhs: Fraction
    relation: Relation
    params: Dict[str, Any]  #: Parameters of the check, echoed for replay.
    checks: Dict[str, bool] = field(default_factory=dict)  #: Auxiliary checks.
    details: Dict[str, Any] = field(default_factory=dict)  #: Intermediate values.

    @classmethod
    def evaluate(
        cls,
        condition: ConditionId,
        lhs: Any,
        rhs: Any,
        relation: Relation,
        params: Dict[str, Any],
        **kwargs: Any,
    ) -> "ConditionReport":
        """
        Build a report, computing holds from lhs, relation and rhs.

        Args:
            condition (ConditionId): the check.
            lhs (Any): left hand side, an int or a Fraction.
            rhs (Any): right hand side, an int or a Fraction.
            relation (Relation): the comparison.
            params (Dict[str, Any]): the echoed parameters.
            **kwargs: checks and details.

        Returns:
            ConditionReport: the report.
        """
        lhs, rhs = Fraction(lhs), Fraction(rhs)
        return cls(
            condition=condition,
            holds=relation.compare(lhs, rhs),
            lhs=lhs,
            rhs=rhs,
            relation=relation,
            params=params,
            **kwargs,
        )

    @property
    def passed(self) -> bool:
        """True if the comparison and every auxiliary check hold."""
        return self.holds and all(self.checks.values())

    @property
    def consistent(self) -> bool:
        """True if holds agrees with the recorded lhs, relation and rhs."""
        return self.holds == self.relation.compare(self.lhs, self.rhs)

    def as_dict(self) -> Dict[str, Any]:
        """
        Returns:
            Dict[str, Any]: the report as plain data.
        """
        return {
            "condition": self.condition.value,
            "holds": self.holds,
            "passed": self.passed,
            "lhs": self.lhs,
            "rhs": self.rhs,
            "relation": self.relation.value,
            "params": dict(self.params),
            "checks": dict(self.checks),
            "details": dict(self.details),
        }

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> "ConditionReport":
        """
        Inverse of :meth:`as_dict` (on decoded data).

        Args:
            data (Dict[str, Any]): the report as plain data.

        Returns:
            ConditionReport: the report.
        """
        return cls(
            condition=ConditionId(data["condition"]),
            holds=bool(data["holds"]),
            lhs=Fraction(data["lhs"]),
            rhs=Fraction(data["rhs"]),
            relation=Relation(data["relation"]),
            params=dict(data["params"]),
            checks=dict(data.get("checks", {})),
            details=dict(data.get("details", {})),
        )

    def __str__(self) -> str:
        verdict = "PASS" if self.passed else "FAIL"
        params = ", ".join(f"{key}={value}" for key, value in self.params.items())
        text = (
            f"[{verdict}] {self.condition.value} ({params}): "
            f"{self.lhs} {self.relation.value} {self.rhs}"
        )
        failed = [name for name, ok in self.checks.items() if not ok]
        if failed:
            text += f" (failed checks: {', '.join(failed)})"
        return text


@dataclass
class ThresholdVerdict:
    """
    Evaluation of the threshold test at one k, with t = k - c and the
    smallest admissible n = (t+1)(c+1).
    """

    k: int
    t: int
    n: int
    lhs: Fraction  #: n - t.
    rhs: Fraction  #: The weighted sum of products.
    fails: bool  #: True if lhs > rhs.
    n_monotone: bool  #: True if failure at n certifies failure at every larger n.


@dataclass
class ThresholdResult:
    """
    Threshold K'(c) from which the test fails for every k of the window.
    """

    c: int
    k_of_c: Fraction  #: The closed-form threshold K(c).
    k_prime: int  #: Smallest k of the window from which every k fails.
    window: range  #: Searched values of k.
    search_log: List[ThresholdVerdict]  #: One verdict per k of the window.

    @property
    def monotone_in_k(self) -> bool:
        """True if no k below k_prime fails."""
        return not any(v.fails for v in self.search_log if v.k < self.k_prime)

    @property
    def certified(self) -> bool:
        """True if every failure from k_prime on is certified for all larger n."""
        return all(v.n_monotone for v in self.search_log if v.k >= self.k_prime)

    def to_report(self) -> ConditionReport:
        """
        Returns:
            ConditionReport: K'(c) <= K(c), with the certificates as auxiliary checks.
        """
        return ConditionReport.evaluate(
            ConditionId.THRESHOLD,
            self.k_prime,
            self.k_of_c,
            Relation.LE,
            {"c": self.c, "window": format_range(self.window)},
            checks={"n-monotone": self.certified},
            details={
                "k_prime": self.k_prime,
                "monotone_in_k": self.monotone_in_k,
                "failing_below": [v.k for v in self.search_log if v.fails and v.k < self.k_prime],
            },
        )

    def __str__(self) -> str:
        return f"K'({self.c}) = {self.k_prime} (K({self.c}) = {self.k_of_c})"
