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
Tests of the exact treewidth solvers, their bounds and the separators.
"""
from fractions import Fraction

import networkx as nx
import pytest
from hypothesis import given, settings, strategies as st
from networkx.algorithms.approximation import treewidth_min_degree

from kneser_tw.exceptions import CapExceeded, OutOfRange
from kneser_tw.exactsolver import (
    BranchAndBoundSolver,
    Heuristic,
    SolveMethod,
    SolverLimits,
    SubsetDPSolver,
    check_p,
    component_sizes,
    decomposition_from_order,
    exact_treewidth,
    greedy_upper_bound,
    is_p_separator,
    make_solver,
    min_balanced_separator,
    probe_upper_bound,
    treewidth_lower_bound,
    width_of_order,
)
from kneser_tw.kneser import KneserParams, build_graph
from kneser_tw.tdecomp import validate_decomposition
from kneser_tw.utils import neighbor_masks
from tests.strategies import SMALL_CORPUS, params_id, small_graphs

BOTH_METHODS = [SolveMethod.SUBSET_DP, SolveMethod.BRANCH_AND_BOUND]


@st.composite
def trees(draw, max_nodes: int = 12) -> nx.Graph:
    size = draw(st.integers(min_value=2, max_value=max_nodes))
    tree = nx.Graph()
    tree.add_nodes_from(range(size))
    for v in range(1, size):
        tree.add_edge(v, draw(st.integers(min_value=0, max_value=v - 1)))
    return tree


def _assert_certified(graph, result):
    report = validate_decomposition(graph, result.certificate)
    assert report.valid
    assert report.width == result.treewidth


@pytest.mark.parametrize("method", BOTH_METHODS)
@pytest.mark.parametrize("m", range(1, 11))
def test_complete_graphs(method, m):
    graph = nx.complete_graph(m)
    result = make_solver(method).solve(graph)
    assert result.exact
    assert result.treewidth == m - 1
    _assert_certified(graph, result)


@pytest.mark.parametrize("method", BOTH_METHODS)
@given(tree=trees())
def test_trees_have_treewidth_one(method, tree):
    result = make_solver(method).solve(tree)
    assert result.treewidth == 1
    _assert_certified(tree, result)


@pytest.mark.parametrize("method", BOTH_METHODS)
def test_petersen(method, petersen):
    result = make_solver(method).solve(petersen)
    assert result.exact
    assert result.method is method
    assert result.treewidth == 4
    assert str(result) == "treewidth 4"
    _assert_certified(petersen, result)


def test_networkx_petersen_agrees(petersen):
    assert exact_treewidth(nx.petersen_graph()).treewidth == exact_treewidth(petersen).treewidth


@settings(max_examples=60)
@given(small_graphs())
def test_both_methods_agree(graph):
    dp = SubsetDPSolver().solve(graph)
    bnb = BranchAndBoundSolver().solve(graph)
    assert dp.treewidth == bnb.treewidth
    _assert_certified(graph, dp)
    _assert_certified(graph, bnb)
    assert treewidth_lower_bound(graph) <= dp.treewidth
    assert dp.treewidth <= greedy_upper_bound(graph)[0]
    if graph.number_of_edges():
        assert dp.treewidth <= treewidth_min_degree(graph)[0]


def test_exact_treewidth_chooses_by_size(petersen):
    assert exact_treewidth(petersen).method is SolveMethod.SUBSET_DP
    limits = SolverLimits(dp_max_vertices=5)
    assert exact_treewidth(petersen, limits).method is SolveMethod.BRANCH_AND_BOUND
    forced = SolverLimits(method=SolveMethod.BRANCH_AND_BOUND)
    assert exact_treewidth(petersen, forced).method is SolveMethod.BRANCH_AND_BOUND


def test_capped_solve_returns_bounds(petersen):
    limits = SolverLimits(dp_max_vertices=5, bnb_max_vertices=5)
    result = exact_treewidth(petersen, limits)
    assert not result.exact
    assert result.stats.capped
    assert result.lower_bound <= 4 <= result.upper_bound == result.treewidth
    assert "not exact" in str(result)
    _assert_certified(petersen, result)


def test_time_limit_brackets(petersen):
    limits = SolverLimits(time_limit=1e-9, method=SolveMethod.BRANCH_AND_BOUND)
    result = exact_treewidth(petersen, limits)
    assert result.lower_bound <= 4 <= result.upper_bound
    assert result.exact == (not result.stats.timed_out)
    _assert_certified(petersen, result)


def test_solve_result_as_dict(petersen):
    data = exact_treewidth(petersen).as_dict()
    assert data["treewidth"] == 4
    assert data["exact"] is True
    assert data["method"] == "subset-dp"
    assert sorted(data["order"]) == list(range(10))


@pytest.mark.parametrize("m", range(1, 8))
def test_bounds_on_complete_graphs(m):
    graph = nx.complete_graph(m)
    assert treewidth_lower_bound(graph) == m - 1
    assert greedy_upper_bound(graph, Heuristic.MIN_DEGREE)[0] == m - 1
    assert greedy_upper_bound(graph, Heuristic.MIN_FILL)[0] == m - 1


@given(tree=trees())
def test_greedy_is_exact_on_trees(tree):
    for heuristic in Heuristic:
        width, order = greedy_upper_bound(tree, heuristic)
        assert width == 1
        assert width_of_order(tree, order) == 1


def test_bounds_on_petersen(petersen):
    assert 3 <= treewidth_lower_bound(petersen) <= 4
    assert 4 <= greedy_upper_bound(petersen, Heuristic.MIN_FILL)[0] <= 6


@given(small_graphs(), st.randoms(use_true_random=False))
def test_decomposition_from_any_order(graph, random):
    order = list(graph.nodes)
    random.shuffle(order)
    td = decomposition_from_order(graph, order)
    report = validate_decomposition(graph, td)
    assert report.valid
    assert td.width == width_of_order(graph, order)


def test_width_of_order_on_a_path():
    assert width_of_order(nx.path_graph(5), range(5)) == 1
    # eliminating the middle first joins its two neighbours
    assert width_of_order(nx.path_graph(3), [1, 0, 2]) == 2


def test_bad_orders_are_rejected():
    with pytest.raises(OutOfRange):
        width_of_order(nx.path_graph(3), [0, 1])
    with pytest.raises(OutOfRange):
        decomposition_from_order(nx.path_graph(3), [0, 1, 1])


def test_neighbor_masks_checks_labels():
    graph = nx.Graph()
    graph.add_edge("a", "b")
    with pytest.raises(ValueError):
        neighbor_masks(graph)


def test_neighbor_masks_rejects_shifted_labels():
    graph = nx.path_graph([1, 2, 3])
    with pytest.raises(ValueError, match="found \\[3\\]"):
        neighbor_masks(graph)
    assert neighbor_masks(nx.path_graph(3)) == [0b010, 0b101, 0b010]


@pytest.mark.parametrize("params", [p for p in SMALL_CORPUS if p.num_vertices <= 15], ids=params_id)
def test_lower_bound_below_exact_on_the_corpus(params):
    graph = build_graph(params)
    result = exact_treewidth(graph)
    assert result.exact
    assert treewidth_lower_bound(graph) <= result.treewidth <= greedy_upper_bound(graph)[0]
    _assert_certified(graph, result)


def test_probe_on_petersen():
    probe = probe_upper_bound(KneserParams(5, 2, 1))
    assert probe.formula == 5
    assert probe.result.treewidth == 4
    assert probe.equal is False
    assert probe.as_dict()["formula"] == 5


@pytest.mark.slow
def test_probe_on_632():
    probe = probe_upper_bound(KneserParams(6, 3, 2))
    assert probe.result.exact
    assert probe.result.treewidth <= 15
    assert probe.equal == (probe.result.treewidth == 15)
    _assert_certified(build_graph(KneserParams(6, 3, 2)), probe.result)


def test_check_p():
    assert check_p("2/3") == Fraction(2, 3)
    assert check_p(Fraction(9, 10)) == Fraction(9, 10)
    for bad in ("1/2", 1, "3/2"):
        with pytest.raises(OutOfRange):
            check_p(bad)


def test_is_p_separator():
    graph = nx.path_graph(5)
    assert is_p_separator(graph, range(5), "2/3")
    assert not is_p_separator(graph, [], "2/3")
    assert is_p_separator(graph, [2], "2/3")
    assert not is_p_separator(graph, [1], "2/3")


def test_component_sizes():
    graph = nx.path_graph(5)
    masks = neighbor_masks(graph)
    assert sorted(component_sizes(masks, 0b11011)) == [2, 2]


def test_min_separator_of_a_path():
    result = min_balanced_separator(nx.path_graph(5))
    assert result.separator == (2,)
    assert result.size == 1
    assert result.is_minimum
    assert sorted(result.components) == [2, 2]


@pytest.mark.parametrize("m", range(1, 8))
def test_min_separator_of_complete_graphs(m):
    result = min_balanced_separator(nx.complete_graph(m))
    assert m - 2 <= result.size <= m


def test_min_separator_of_petersen(petersen):
    result = min_balanced_separator(petersen)
    assert result.size <= 5
    assert is_p_separator(petersen, result.separator, Fraction(2, 3))
    assert result.as_dict()["p"] == Fraction(2, 3)


def test_min_separator_cap():
    with pytest.raises(CapExceeded):
        min_balanced_separator(nx.complete_graph(21))


@pytest.mark.parametrize("params", [p for p in SMALL_CORPUS if p.num_vertices <= 15], ids=params_id)
def test_separator_below_treewidth_plus_one(params):
    graph = build_graph(params)
    assert min_balanced_separator(graph).size <= exact_treewidth(graph).treewidth + 1


@pytest.mark.slow
@pytest.mark.parametrize("params", [p for p in SMALL_CORPUS if p.num_vertices <= 20], ids=params_id)
def test_separator_below_treewidth_plus_one_up_to_20_vertices(params):
    graph = build_graph(params)
    assert min_balanced_separator(graph).size <= exact_treewidth(graph).treewidth + 1
