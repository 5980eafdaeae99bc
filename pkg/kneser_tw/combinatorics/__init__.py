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
Exact combinatorics: binomials with the zero convention, colex ranking of
k-subsets and certified rational enclosures of ln and exp.

Python integers and :class:`fractions.Fraction` are the arbitrary precision
integers and rationals of the whole package.
"""
from .binomial import binom, falling_factorial
from .colex import KSubset, colex_rank, colex_unrank, iter_colex
from .enclosure import RationalInterval, exp_enclosure, ln_enclosure
