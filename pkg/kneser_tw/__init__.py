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
This is the kneser_tw module.

It contains the tools to study the treewidth of generalized Kneser graphs
K(n,k,t):

* exact integer and rational combinatorics (binomials, colex ranking,
  certified logarithm enclosures);
* the Kneser graphs themselves and their classical independent sets;
* tree decompositions, their validation and the star construction;
* exact treewidth and balanced separator oracles for small graphs;
* the exact verification of the inequalities behind the treewidth formula;
* the PACE codecs, the reports and the command line interface.
"""
__version__ = "0.1.0"

RELEASE_NAME = "Petersen"
