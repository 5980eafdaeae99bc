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
Generalized Kneser graphs K(n, k, t), their parameters and independent sets.
"""
from .params import KneserParams, validate_params, corpus_params
from .graph import (
    DEFAULT_MAX_VERTICES,
    KneserGraph,
    build_graph,
    is_adjacent,
    max_degree_formula,
)
from .independent import (
    DEFAULT_ALPHA_MAX_VERTICES,
    AlphaResult,
    VertexSet,
    brute_force_alpha,
    crowded_independent_set,
    crowded_set_size,
    find_edge,
    is_independent,
    pencil_independent_set,
    upper_bound_not_tight,
)
