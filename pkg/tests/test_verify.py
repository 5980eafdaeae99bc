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
Tests of the exact verification of the counting inequalities, thresholds and cases.
"""
import math
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from kneser_tw.exceptions import InvalidParameters, OutOfRange, ParamConstraint
from kneser_tw.report import encode_value
from kneser_tw.verify import (
    ConditionId,
    ConditionReport,
    Relation,
    Suite,
    SuiteOptions,
    binomial_threshold,
    case_sum,
    check_corollary14_cases,
    check_degree_bound,
    check_f_monotone,
    check_lemma5,
    check_lemma8_separator_bound,
    check_theorem9,
    compare_bounds,
    compute_K,
    compute_Kprime,
    cubic_threshold,
    default_window,
    f_hypothesis,
    f_profile,
    intersection_sum,
    replay,
    reproduces,
    run_suite,
    suite_ranges,
    threshold_verdict,
    treewidth_formula_guaranteed,
)


@st.composite
def kneser_triples(draw, max_n: int = 30):
    """(n, k, t) with k > t >= 1 and n > 2k - t."""
    t = draw(st.integers(min_value=1, max_value=6))
    k = draw(st.integers(min_value=t + 1, max_value=t + 6))
    n = draw(st.integers(min_value=2 * k - t + 1, max_value=max(max_n, 2 * k - t + 1)))
    return n, k, t


def test_lemma5_equality():
    report = check_lemma5(5, 3, 2)
    assert report.condition is ConditionId.LEMMA5
    assert report.lhs == report.rhs == 10
    assert report.details["families"] == [3, 3, 4]
    assert report.passed
    assert report.checks == {"enumeration": True, "disjoint": True}


def test_lemma5_strict():
    report = check_lemma5(8, 4, 2)
    assert report.details["families"] == [17, 15, 24]
    assert report.lhs == 56
    assert report.rhs == 70
    assert report.passed


def test_lemma5_k_equal_t():
    report = check_lemma5(5, 2, 2)
    assert report.details["families"] == [9, 1, 0]
    assert report.passed


def test_lemma5_skips_enumeration_above_cap():
    report = check_lemma5(8, 4, 2, enumeration_cap=10)
    assert report.checks == {}
    assert "enumerated" not in report.details
    assert report.holds


@pytest.mark.parametrize(
    "n, k, t, constraint",
    [
        (5, 3, 0, ParamConstraint.T_POSITIVE),
        (5, 2, 3, ParamConstraint.K_AT_LEAST_T),
        (3, 3, 2, ParamConstraint.N_GREATER_THAN_K),
    ],
)
def test_lemma5_invalid(n, k, t, constraint):
    with pytest.raises(InvalidParameters) as info:
        check_lemma5(n, k, t)
    assert info.value.constraint is constraint


@given(
    st.integers(min_value=2, max_value=12).flatmap(
        lambda n: st.tuples(
            st.just(n),
            st.integers(min_value=1, max_value=n - 1).flatmap(
                lambda k: st.tuples(st.just(k), st.integers(min_value=1, max_value=k))
            ),
        )
    )
)
def test_lemma5_enumeration(triple):
    n, (k, t) = triple
    report = check_lemma5(n, k, t)
    assert report.passed


@given(kneser_triples(max_n=40))
def test_intersection_sum_vanishes_beyond_k_minus_t(triple):
    n, k, t = triple
    assert intersection_sum(n, k, t, t) == intersection_sum(n, k, t, min(t, k - t))


def test_f_profile():
    profile = f_profile(8, 4, 2)
    assert profile.values == (6, 15)
    assert profile.monotone
    assert profile.hypothesis


def test_f_profile_invalid():
    with pytest.raises(InvalidParameters) as info:
        f_profile(8, 2, 2)
    assert info.value.constraint is ParamConstraint.K_GREATER_THAN_T


@given(kneser_triples(max_n=60))
def test_f_hypothesis_forces_monotone(triple):
    n, k, t = triple
    if f_hypothesis(n, k, t):
        assert f_profile(n, k, t).monotone
        assert check_f_monotone(n, k, t).passed


def test_f_monotone_report():
    report = check_f_monotone(8, 4, 2)
    assert report.condition is ConditionId.F_MONOTONE
    assert report.lhs == 9
    assert report.relation is Relation.GE
    assert report.details == {"values": [6, 15], "hypothesis": True}


def test_degree_bound_petersen():
    report = check_degree_bound(5, 2, 1)
    assert report.lhs == report.rhs == 3
    assert report.passed


@given(kneser_triples())
def test_degree_bound_always_holds(triple):
    assert check_degree_bound(*triple).passed


def test_theorem9_holds():
    reports = check_theorem9(36, 3, 2)
    assert [r.condition for r in reports] == [
        ConditionId.EQNS1,
        ConditionId.EQNS2,
        ConditionId.EQNS3,
    ]
    assert all(r.holds for r in reports)
    assert reports[0].rhs == 6
    assert reports[1].rhs == 3
    assert reports[2].lhs == Fraction(34, 3)
    assert reports[2].rhs == 4
    assert treewidth_formula_guaranteed(reports)


def test_theorem9_fails_below_range():
    eqns1, eqns2, eqns3 = check_theorem9(5, 3, 2)
    assert not eqns1.holds
    assert eqns2.holds
    assert not eqns3.holds
    assert eqns3.lhs == 1
    assert not treewidth_formula_guaranteed([eqns1, eqns2, eqns3])
    assert not treewidth_formula_guaranteed([])


def test_theorem9_invalid():
    with pytest.raises(InvalidParameters):
        check_theorem9(10, 2, 2)
    with pytest.raises(InvalidParameters):
        check_theorem9(10, 2, 0)


def test_lemma8_bound():
    report = check_lemma8_separator_bound(36, 3, 2)
    assert report.condition is ConditionId.LEMMA8
    assert report.lhs == Fraction(34, 3)
    assert report.rhs == 4
    assert report.params["p"] == Fraction(2, 3)
    assert report.checks == {"eqns1": True, "eqns2": True, "sum-limit": True}
    # C(36, 3) is far above the separator cap
    assert "separator_size" not in report.details
    assert report.passed


def test_lemma8_bound_fails():
    report = check_lemma8_separator_bound(5, 3, 2, "9/10")
    assert not report.holds
    assert not report.checks["eqns1"]


@pytest.mark.parametrize("p", [Fraction(1, 2), 1, "3/2"])
def test_lemma8_rejects_balance(p):
    with pytest.raises(OutOfRange):
        check_lemma8_separator_bound(36, 3, 2, p)


def test_compute_k():
    assert compute_K(1) == 12
    assert compute_K(2) == 55


@pytest.mark.parametrize("c", range(1, 11))
def test_compute_k_above_2c(c):
    assert compute_K(c) > 2 * c


def test_compute_k_invalid():
    with pytest.raises(OutOfRange):
        compute_K(0)


def test_threshold_verdict_c1():
    # at c = 1 the sum is the constant 12 and n - t = k + 1
    for k in (3, 11, 12, 20):
        verdict = threshold_verdict(1, k)
        assert verdict.t == k - 1
        assert verdict.n == 2 * k
        assert verdict.lhs == k + 1
        assert verdict.rhs == 12
        assert verdict.fails == (k >= 12)


def test_compute_kprime_c1():
    result = compute_Kprime(1)
    assert result.k_prime == 12
    assert result.window == default_window(1) == range(3, 49)
    assert result.monotone_in_k
    assert result.certified
    assert str(result) == "K'(1) = 12 (K(1) = 12)"
    report = result.to_report()
    assert report.condition is ConditionId.THRESHOLD
    assert report.passed
    assert report.params == {"c": 1, "window": "3..48"}


def test_compute_kprime_c2():
    result = compute_Kprime(2)
    assert result.k_prime == 54
    assert result.k_of_c == 55
    assert result.to_report().passed


@pytest.mark.slow
@pytest.mark.parametrize("c, expected", [(3, 195), (4, 626)])
def test_compute_kprime_slow(c, expected):
    result = compute_Kprime(c)
    assert result.k_prime == expected
    assert result.to_report().passed


def test_compute_kprime_window_too_small():
    with pytest.raises(OutOfRange):
        compute_Kprime(1, range(3, 20))


def test_compute_kprime_wider_window():
    assert compute_Kprime(1, range(1, 100)).k_prime == 12


def test_case_sum_t2():
    assert case_sum(Fraction(1, 6), 2) == Fraction(25, 144)


def test_cases_t2():
    report = check_corollary14_cases(2)
    assert report.condition is ConditionId.CASE1
    assert report.lhs == Fraction(25, 144)
    assert report.rhs == Fraction(1, 3)
    assert report.passed


def test_cases_middle_uses_ln_enclosure():
    report = check_corollary14_cases(17)
    assert report.condition is ConditionId.CASE2
    assert report.details["ln_lo"] <= report.details["ln_hi"]
    assert report.details["ln_hi"] - report.details["ln_lo"] <= Fraction(1, 10**6)
    assert report.passed


def test_cases_tail():
    report = check_corollary14_cases(24)
    assert report.condition is ConditionId.TAIL24
    assert report.rhs == 23
    assert report.checks == {"derivative": True, "horizon": True}
    assert report.params["horizon"] == 200
    assert report.passed


@pytest.mark.parametrize("t", range(2, 25))
def test_cases_all_pass(t):
    assert check_corollary14_cases(t, horizon=60).passed


def test_cases_invalid():
    with pytest.raises(OutOfRange):
        check_corollary14_cases(1)


@pytest.mark.parametrize(
    "k, t",
    [(k, t) for k in range(3, 13) for t in range(2, min(k - 1, 16) + 1)],
)
def test_cubic_threshold_implies_theorem9(k, t):
    threshold = math.ceil(cubic_threshold(k, t).hi) + t
    assert check_corollary14_cases(t, horizon=60).passed
    for n in (threshold, threshold + 1):
        assert treewidth_formula_guaranteed(check_theorem9(n, k, t)), (n, k, t)


def test_compare_bounds_holds():
    report = compare_bounds(10, 5)
    assert report.condition is ConditionId.LIU_BOUND
    assert report.rhs == binomial_threshold(10, 5) == 15136
    assert report.lhs == 1805
    assert report.details["cubic_without_t"] == 1800
    assert report.details["ratio"] == Fraction(1805, 15136)
    assert report.passed


def test_compare_bounds_small_k():
    report = compare_bounds(3, 2)
    assert report.rhs == 24
    assert report.lhs == 38
    assert not report.holds


def test_cubic_threshold_with_ln():
    enclosure = cubic_threshold(20, 17)
    assert enclosure.lo < enclosure.hi
    report = compare_bounds(20, 17)
    assert "eps" in report.params
    assert report.lhs == enclosure.hi + 17


def test_compare_bounds_invalid():
    with pytest.raises(InvalidParameters):
        compare_bounds(2, 2)
    with pytest.raises(OutOfRange):
        compare_bounds(3, 1)


@pytest.mark.parametrize(
    "report",
    [
        check_lemma5(6, 3, 2),
        check_theorem9(36, 3, 2)[2],
        check_f_monotone(8, 4, 2),
        check_degree_bound(7, 3, 1),
        check_corollary14_cases(5),
        compare_bounds(10, 5),
        compute_Kprime(1).to_report(),
    ],
    ids=lambda report: report.condition.value,
)
def test_reports_reproduce(report):
    assert reproduces(report)


def test_replay_from_encoded_report():
    report = check_lemma8_separator_bound(36, 3, 2)
    stored = ConditionReport.from_dict(encode_value(report.as_dict()))
    assert stored.lhs == report.lhs
    assert replay(stored).passed
    assert reproduces(stored)


def test_replay_keeps_the_separator_cap():
    report = check_lemma8_separator_bound(36, 3, 2, separator_cap=5)
    assert report.params["separator_cap"] == 5
    stored = ConditionReport.from_dict(encode_value(report.as_dict()))
    assert int(replay(stored).params["separator_cap"]) == 5


def test_tampered_report_does_not_reproduce():
    report = check_theorem9(5, 3, 2)[0]
    report.holds = True
    assert not report.consistent
    assert not reproduces(report)


def test_report_str():
    text = str(check_theorem9(5, 3, 2)[0])
    assert text == "[FAIL] eqns1 (n=5, k=3, t=2): 5 >= 6"


def test_run_suite_keeps_order():
    result = run_suite(Suite.CASES, {"t": range(2, 10)}, SuiteOptions(workers=4))
    assert [report.params["t"] for report in result.reports] == list(range(2, 10))
    assert result.passed
    assert result.as_dict()["ranges"] == {"t": "2..9"}


def test_run_suite_default_theorem9():
    result = run_suite(Suite.THEOREM9)
    assert len(result.reports) == 3
    assert result.passed
    assert not result.failures


def test_run_suite_lemma5():
    result = run_suite("lemma5", {"n": range(2, 9)})
    assert result.reports
    assert result.passed
    assert all("enumeration" in report.checks for report in result.reports)


def test_run_suite_bounds_failures():
    result = run_suite(Suite.BOUNDS, {"k": range(3, 4), "t": range(2, 3)})
    assert not result.passed
    assert len(result.failures) == 1


def test_run_suite_empty_range():
    result = run_suite(Suite.THEOREM9, {"k": range(2, 3)})
    assert result.reports == []
    assert result.passed


def test_suite_ranges_unknown_parameter():
    with pytest.raises(ValueError):
        suite_ranges(Suite.CASES, {"n": range(1, 3)})


def test_suite_ranges_override():
    ranges = suite_ranges(Suite.BOUNDS, {"k": range(4, 6)})
    assert ranges == {"k": range(4, 6), "t": range(3, 21)}


@pytest.mark.slow
@pytest.mark.parametrize("suite", [Suite.LEMMA5, Suite.F, Suite.DEGREE, Suite.CASES])
def test_default_suites_pass(suite):
    result = run_suite(suite, options=SuiteOptions(workers=4))
    assert result.reports
    assert result.passed
