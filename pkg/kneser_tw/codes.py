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
Exit codes of the kneser-tw command line.
"""

from enum import IntEnum


class ExitCode(IntEnum):
    """
    Exit codes of the kneser-tw commands.
    """

    SUCCESS = 0  #: Every check passed.
    CHECK_FAILED = 1  #: A verification or a validation failed.
    USAGE_ERROR = 2  #: Invalid usage or unreadable input.
    RESOURCE_LIMIT = 3  #: A size cap or a time limit was hit.
