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
Exceptions raised by kneser-tw.

Every exception keeps its payload as attributes so that callers (and the
command line) can report exactly what went wrong.
"""
from enum import Enum
from typing import Any, Optional


class ParamConstraint(str, Enum):
    """
    Constraints on the parameters (n, k, t).
    """

    K_GREATER_THAN_T = "k>t"  #: k > t.
    T_POSITIVE = "t>0"  #: t > 0.
    N_GREATER_THAN_2K_MINUS_T = "n>2k-t"  #: n > 2k - t, the graph is non-empty.
    N_GREATER_THAN_K = "n>k"  #: n > k.
    K_AT_LEAST_T = "k>=t"  #: k >= t.


class KneserTWError(Exception):
    """
    Base exception for kneser-tw.
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
        return self.message


class InvalidParameters(KneserTWError, ValueError):
    """
    Exception raised when (n, k, t) violate a constraint.
    """

    constraint: ParamConstraint  #: The violated constraint.
    n: int
    k: int
    t: int

    def __init__(self, constraint: ParamConstraint, n: int, k: int, t: int) -> None:
        """
        Args:
            constraint (ParamConstraint): the violated constraint.
            n (int): n parameter.
            k (int): k parameter.
            t (int): t parameter.
        """
        self.constraint = constraint
        self.n = n
        self.k = k
        self.t = t
        super().__init__(
            f"Invalid parameters (n={n}, k={k}, t={t}): constraint {constraint.value} is violated."
        )


class InvalidSubset(KneserTWError, ValueError):
    """
    Exception raised for a malformed subset of [n].
    """


class OutOfRange(KneserTWError, ValueError):
    """
    Exception raised when a value is outside of its allowed range.
    """

    name: str  #: Name of the value.
    value: Any  #: The offending value.
    allowed: str  #: Human readable allowed range.

    def __init__(self, name: str, value: Any, allowed: str) -> None:
        """
        Args:
            name (str): name of the value.
            value (Any): the offending value.
            allowed (str): the allowed range.
        """
        self.name = name
        self.value = value
        self.allowed = allowed
        super().__init__(f"{name} = {value} is out of range (allowed: {allowed}).")


class CapExceeded(KneserTWError):
    """
    Exception raised when an object is larger than a configured cap.
    """

    what: str  #: What is capped.
    size: int  #: Requested size.
    cap: int  #: Configured cap.

    def __init__(self, what: str, size: int, cap: int) -> None:
        """
        Args:
            what (str): what is capped.
            size (int): requested size.
            cap (int): configured cap.
        """
        self.what = what
        self.size = size
        self.cap = cap
        super().__init__(f"{what}: size {size} exceeds the cap {cap}.")


class NotIndependent(KneserTWError, ValueError):
    """
    Exception raised when a vertex set expected to be independent has an edge.
    """

    u: int
    v: int

    def __init__(self, u: int, v: int) -> None:
        """
        Args:
            u (int): first end of the edge.
            v (int): second end of the edge.
        """
        self.u = u
        self.v = v
        super().__init__(f"The vertex set is not independent: {u} and {v} are adjacent.")


class ParseError(KneserTWError):
    """
    Exception raised when a PACE file cannot be parsed.
    """

    path: Optional[str]
    line_number: Optional[int]

    def __init__(
        self, message: str, path: Optional[str] = None, line_number: Optional[int] = None
    ) -> None:
        """
        Args:
            message (str): what is wrong.
            path (str, optional): the parsed file. Defaults to None.
            line_number (int, optional): 1-based line number. Defaults to None.
        """
        self.path = path
        self.line_number = line_number
        location = path if path is not None else "<input>"
        if line_number is not None:
            location += f":{line_number}"
        super().__init__(f"{location}: {message}")


class ThresholdNotFound(KneserTWError):
    """
    Exception raised when no failure point of the threshold test lies in the searched window.
    """

    c: int
    window: range

    def __init__(self, c: int, window: range) -> None:
        """
        Args:
            c (int): the value of c = k - t.
            window (range): the searched window of k.
        """
        self.c = c
        self.window = window
        super().__init__(
            f"No threshold found for c={c} in the window k={window.start}..{window.stop - 1}."
        )
