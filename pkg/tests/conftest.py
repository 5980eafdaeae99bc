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
Shared fixtures of the kneser-tw tests.
"""
import pytest
from hypothesis import settings

from kneser_tw.kneser import KneserParams, build_graph

# the exact solvers have no per-example time guarantee
settings.register_profile("kneser-tw", deadline=None)
settings.load_profile("kneser-tw")


@pytest.fixture
def petersen():
    """K(5, 2, 1) with materialized adjacency."""
    return build_graph(KneserParams(5, 2, 1))


@pytest.fixture
def kneser_632():
    """K(6, 3, 2), 20 vertices, 10-regular."""
    return build_graph(KneserParams(6, 3, 2))


@pytest.fixture
def kneser_532():
    """K(5, 3, 2), 10 vertices, below the Wilson range."""
    return build_graph(KneserParams(5, 3, 2))
