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
Hypothesis strategies and small corpora.
"""
from typing import Tuple

import networkx as nx
from hypothesis import strategies as st

from kneser_tw.kneser import KneserParams, corpus_params

#: Every valid (n, k, t) with at most 40 vertices.
SMALL_CORPUS = corpus_params(40)


def params_id(params: KneserParams) -> str:
    return f"K{params.n}-{params.k}-{params.t}"


@st.composite
def small_graphs(draw, min_nodes: int = 1, max_nodes: int = 9) -> nx.Graph:
    """Random graphs on 0..N-1."""
    size = draw(st.integers(min_value=min_nodes, max_value=max_nodes))
    graph = nx.Graph()
    graph.add_nodes_from(range(size))
    pairs = [(u, v) for u in range(size) for v in range(u + 1, size)]
    if pairs:
        chosen = draw(st.lists(st.sampled_from(pairs), unique=True, max_size=len(pairs)))
        graph.add_edges_from(chosen)
    return graph


@st.composite
def subsets(draw, max_n: int = 12) -> Tuple[int, Tuple[int, ...]]:
    """(n, elements) with elements a non-empty subset of [n], sorted."""
    n = draw(st.integers(min_value=1, max_value=max_n))
    elements = draw(
        st.lists(st.integers(min_value=1, max_value=n), min_size=1, max_size=n, unique=True)
    )
    return n, tuple(sorted(elements))


rationals = st.fractions(min_value=-1000, max_value=1000, max_denominator=1000)
