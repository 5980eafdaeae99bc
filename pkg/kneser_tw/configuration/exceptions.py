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
Exceptions for the reading of the configuration file.
"""
from typing import Any


class InvalidConfiguration(Exception):
    """
    Base exception for an invalid configuration of kneser-tw.
    """

    message: str

    def __init__(self, message: str = "") -> None:
        """
        Args:
            message (str, optional): error message. Defaults to "".
        """
        super().__init__(message)
        self.message = message

    def __str__(self) -> str:
        """Error message.

        Returns:
            str: error message.
        """
        return f"Invalid configuration: {self.message}"


class InvalidCap(InvalidConfiguration):
    """
    Exception raised when a cap or a count of the configuration is invalid.
    """

    key: str  #: Key of the faulty value.
    value: Any  #: The value that is not right.
    minimum: int  #: Smallest allowed value.

    def __init__(self, key: str, value: Any, minimum: int = 1) -> None:
        """
        Args:
            key (str): key of the faulty value.
            value (Any): the value that is not right.
            minimum (int, optional): smallest allowed value. Defaults to 1.
        """
        self.key = key
        self.value = value
        self.minimum = minimum
        super().__init__()

    def __str__(self) -> str:
        return f"{self.key} must be an integer >= {self.minimum} (input : {self.value!r})"


class InvalidRational(InvalidConfiguration):
    """
    Exception raised when an exact rational of the configuration is invalid.
    """

    key: str  #: Key of the faulty value.
    value: Any  #: The value that is not right.

    def __init__(self, key: str, value: Any) -> None:
        """
        Args:
            key (str): key of the faulty value.
            value (Any): the value that is not right.
        """
        self.key = key
        self.value = value
        super().__init__()

    def __str__(self) -> str:
        return f'{self.key} must be an integer or a "num/den" string (input : {self.value!r})'
