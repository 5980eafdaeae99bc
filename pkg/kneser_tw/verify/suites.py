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
Verification suites: sweeps of a check over parameter ranges.

Every suite has default ranges, overridable per parameter. The parameter
tuples are evaluated by a thread pool and the reports are kept in parameter
order, whatever the number of workers.
"""
import logging
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from typing import Any, Callable, Dict, Iterator, List, Mapping, Optional, Tuple

from kneser_tw.verify.bounds import compare_bounds
from kneser_tw.verify.cases import DEFAULT_HORIZON, DEFAULT_LN_EPS, check_corollary14_cases
from kneser_tw.verify.lemmas import (
    DEFAULT_ENUMERATION_CAP,
    check_degree_bound,
    check_f_monotone,
    check_lemma5,
    check_theorem9,
    f_hypothesis,
)
from kneser_tw.verify.reports import ConditionReport
from kneser_tw.verify.thresholds import compute_Kprime
from kneser_tw.utils import format_range

logger = logging.getLogger(__name__)

Ranges = Dict[str, range]


class Suite(str, Enum):
    """
    Available verification suites.
    """

    LEMMA5 = "lemma5"  #: Disjoint families of k-subsets, with enumeration.
    F = "f"  #: Monotonicity of the profile f under its hypothesis.
    THEOREM9 = "theorem9"  #: The three sufficient conditions.
    THRESHOLDS = "thresholds"  #: K'(c).
    CASES = "cases"  #: Case analysis over t.
    BOUNDS = "bounds"  #: Cubic against binomial threshold.
    DEGREE = "degree"  #: Degree bound.


#: Parameters of each suite, in tuple order.
SUITE_PARAMETERS: Dict[Suite, Tuple[str, ...]] = {
    Suite.LEMMA5: ("n", "k", "t"),
    Suite.F: ("n", "k", "t"),
    Suite.THEOREM9: ("n", "k", "t"),
    Suite.THRESHOLDS: ("c",),
    Suite.CASES: ("t",),
    Suite.BOUNDS: ("k", "t"),
    Suite.DEGREE: ("n", "k", "t"),
}

#: Default ranges. Missing k or t ranges span every admissible value.
DEFAULT_RANGES: Dict[Suite, Ranges] = {
    Suite.LEMMA5: {"n": range(2, 31)},
    Suite.F: {"n": range(2, 81), "k": range(2, 13)},
    Suite.THEOREM9: {"n": range(36, 37), "k": range(3, 4), "t": range(2, 3)},
    Suite.THRESHOLDS: {"c": range(1, 5)},
    Suite.CASES: {"t": range(2, 25)},
    Suite.BOUNDS: {"k": range(10, 21), "t": range(3, 21)},
    Suite.DEGREE: {"n": range(3, 31)},
}


@dataclass(frozen=True)
class SuiteOptions:
    """
    Options shared by the suites.
    """

    enumeration_cap: int = DEFAULT_ENUMERATION_CAP  #: Largest C(n, k) enumerated by lemma5.
    ln_eps: Fraction = DEFAULT_LN_EPS  #: Width of the ln enclosures.
    horizon: int = DEFAULT_HORIZON  #: Last t of the growth certificate.
    workers: int = 1  #: Number of worker threads.


@dataclass
class SuiteResult:
    """
    Reports of a suite, in parameter order.
    """

    suite: Suite
    ranges: Ranges
    reports: List[ConditionReport] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        """True if every report passed."""
        return all(report.passed for report in self.reports)

    @property
    def failures(self) -> List[ConditionReport]:
        """Reports that did not pass."""
        return [report for report in self.reports if not report.passed]

    def as_dict(self) -> Dict[str, Any]:
        """
        Returns:
            Dict[str, Any]: the suite result as plain data.
        """
        return {
            "suite": self.suite.value,
            "ranges": {name: format_range(values) for name, values in self.ranges.items()},
            "passed": self.passed,
            "count": len(self.reports),
        }


def _tuples(suite: Suite, ranges: Ranges) -> Iterator[Tuple[int, ...]]:
    if suite in (Suite.THRESHOLDS, Suite.CASES):
        key = SUITE_PARAMETERS[suite][0]
        yield from ((value,) for value in ranges[key])
        return
    if suite is Suite.BOUNDS:
        for k in ranges["k"]:
            for t in ranges.get("t", range(2, k)):
                if 2 <= t < k:
                    yield (k, t)
        return
    for n in ranges["n"]:
        for k in ranges.get("k", range(1, n)):
            for t in ranges.get("t", range(1, k + 1)):
                if suite is Suite.LEMMA5:
                    admissible = n > k >= t >= 1
                elif suite is Suite.DEGREE:
                    admissible = k > t >= 1 and n > 2 * k - t
                else:
                    admissible = k > t >= 1
                if admissible:
                    yield (n, k, t)


def _job(suite: Suite, options: SuiteOptions) -> Callable[[Tuple[int, ...]], List[ConditionReport]]:
    if suite is Suite.LEMMA5:
        return lambda p: [check_lemma5(*p, enumeration_cap=options.enumeration_cap)]
    if suite is Suite.DEGREE:
        return lambda p: [check_degree_bound(*p)]
    if suite is Suite.F:
        return lambda p: [check_f_monotone(*p)] if f_hypothesis(*p) else []
    if suite is Suite.THEOREM9:
        return lambda p: check_theorem9(*p)
    if suite is Suite.THRESHOLDS:
        return lambda p: [compute_Kprime(p[0]).to_report()]
    if suite is Suite.CASES:
        return lambda p: [check_corollary14_cases(p[0], options.ln_eps, options.horizon)]
    return lambda p: [compare_bounds(p[0], p[1], options.ln_eps)]


def suite_ranges(suite: Suite, overrides: Optional[Mapping[str, range]] = None) -> Ranges:
    """
    Effective ranges of a suite.

    Args:
        suite (Suite): the suite.
        overrides (Mapping[str, range], optional): ranges given by the user. Defaults to None.

    Raises:
        ValueError: if an override names a parameter the suite does not have.

    Returns:
        Ranges: the defaults updated with the overrides.
    """
    ranges = dict(DEFAULT_RANGES[suite])
    for name, values in (overrides or {}).items():
        if name not in SUITE_PARAMETERS[suite]:
            raise ValueError(f"Suite {suite.value} has no parameter {name}.")
        ranges[name] = values
    return ranges


def run_suite(
    suite: Suite,
    ranges: Optional[Mapping[str, range]] = None,
    options: Optional[SuiteOptions] = None,
) -> SuiteResult:
    """
    Run a verification suite.

    Args:
        suite (Suite): the suite.
        ranges (Mapping[str, range], optional): range overrides. Defaults to None.
        options (SuiteOptions, optional): shared options. Defaults to SuiteOptions().

    Returns:
        SuiteResult: the reports in parameter order.
    """
    suite = Suite(suite)
    options = options if options is not None else SuiteOptions()
    effective = suite_ranges(suite, ranges)
    tuples = list(_tuples(suite, effective))
    logger.info(
        "Running suite %s on %i parameter tuples with %i workers.",
        suite.value,
        len(tuples),
        options.workers,
    )
    job = _job(suite, options)
    with ThreadPoolExecutor(max_workers=max(1, options.workers)) as executor:
        batches = list(executor.map(job, tuples))
    result = SuiteResult(suite, effective, [report for batch in batches for report in batch])
    if not result.reports:
        logger.warning("Suite %s checked nothing in the given ranges.", suite.value)
    for failure in result.failures:
        logger.warning("Failed: %s", str(failure))
    return result
