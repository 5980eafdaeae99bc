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
Abstract class for kneser-tw configuration sections.
"""
import abc
from fractions import Fraction
from typing import Any, Dict

from kneser_tw.configuration.exceptions import InvalidCap, InvalidRational
from kneser_tw.utils import parse_rational


# pylint: disable=too-few-public-methods
class BaseConfiguration(abc.ABC):
    """
    Base configuration section (abstract).
    """

    def __init__(self, config: Dict) -> None:
        """
        Args:
            config (Dict): dict corresponding to one of the sections in the configuration.
        """
        self.from_dict(config)

    @abc.abstractmethod
    def from_dict(self, config: Dict) -> None:
        """Import the configuration from a dictionary (TOML).

        Args:
            config (Dict): dictionary holding the section.
        """

    @staticmethod
    def _cap(config: Dict, key: str, default: int, minimum: int = 1) -> int:
        """Read a positive integer.

        Raises:
            InvalidCap: if the value is not an integer or is below minimum.
        """
        value: Any = config.get(key, default)
        if isinstance(value, bool) or not isinstance(value, int) or value < minimum:
            raise InvalidCap(key, value, minimum)
        return value

    @staticmethod
    def _rational(config: Dict, key: str, default: Fraction) -> Fraction:
        """Read an exact rational given as "num/den" or as an integer.

        Raises:
            InvalidRational: if the value is not an exact rational.
        """
        value: Any = config.get(key, default)
        try:
            return parse_rational(value)
        except (ValueError, TypeError, ZeroDivisionError) as exc:
            raise InvalidRational(key, value) from exc
