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
Configuration for the solver and separator sections.
"""
from fractions import Fraction
from typing import Optional

from kneser_tw.configuration.base import BaseConfiguration
from kneser_tw.configuration.exceptions import InvalidConfiguration, InvalidRational
from kneser_tw.exactsolver import (
    DEFAULT_BNB_MAX_VERTICES,
    DEFAULT_DP_MAX_VERTICES,
    DEFAULT_SEPARATOR_MAX_VERTICES,
    MIN_P,
    Heuristic,
    SolveMethod,
    SolverLimits,
)


class SolverConfiguration(BaseConfiguration):
    """
    Exact solver configuration. It should correspond to the solver section.
    """

    dp_max_vertices: int  #: Largest graph given to the subset DP.
    bnb_max_vertices: int  #: Largest graph given to the branch and bound.
    time_limit: float  #: Wall-clock limit in seconds, 0 for none.
    heuristic: Heuristic  #: Heuristic of the initial incumbent.

    DEFAULT_DP_MAX_VERTICES: int = DEFAULT_DP_MAX_VERTICES  #: Default subset DP cap.
    DEFAULT_BNB_MAX_VERTICES: int = DEFAULT_BNB_MAX_VERTICES  #: Default branch and bound cap.
    DEFAULT_TIME_LIMIT: float = 0  #: Default time limit (none).
    DEFAULT_HEURISTIC_STR: str = "min-fill"  #: Default heuristic (as a string).

    def from_dict(self, config: dict) -> None:
        """Fill instance from the solver section.

        Args:
            config (dict): dict corresponding to the solver section.

        Raises:
            InvalidConfiguration: if the time limit is negative or the heuristic unknown.
        """
        self.dp_max_vertices = self._cap(config, "dp_max_vertices", self.DEFAULT_DP_MAX_VERTICES)
        self.bnb_max_vertices = self._cap(
            config, "bnb_max_vertices", self.DEFAULT_BNB_MAX_VERTICES
        )

        time_limit = config.get("time_limit", self.DEFAULT_TIME_LIMIT)
        if isinstance(time_limit, bool) or not isinstance(time_limit, (int, float)) or time_limit < 0:
            raise InvalidConfiguration(
                f"time_limit must either be a positive number of seconds or 0 (input : {time_limit!r})"
            )
        self.time_limit = float(time_limit)

        heuristic_str = config.get("heuristic", self.DEFAULT_HEURISTIC_STR)
        try:
            self.heuristic = Heuristic(heuristic_str)
        except ValueError as exc:
            raise InvalidConfiguration(
                f"{heuristic_str} is not a valid heuristic. Valid choices are {[h.value for h in Heuristic]}."
            ) from exc

    def limits(self, method: Optional[SolveMethod] = None) -> SolverLimits:
        """
        Args:
            method (SolveMethod, optional): forced method. Defaults to None.

        Returns:
            SolverLimits: the limits of the section.
        """
        return SolverLimits(
            dp_max_vertices=self.dp_max_vertices,
            bnb_max_vertices=self.bnb_max_vertices,
            time_limit=self.time_limit,
            heuristic=self.heuristic,
            method=method,
        )

    def __str__(self) -> str:
        res = "==========================\n"
        res += "== Solver Configuration ==\n"
        res += "==========================\n"
        res += f"Subset DP max vertices : {self.dp_max_vertices}\n"
        res += f"Branch and bound max vertices : {self.bnb_max_vertices}\n"
        res += f"Time limit : {self.time_limit}\n"
        res += f"Heuristic : {self.heuristic.value}\n"
        return res


class SeparatorConfiguration(BaseConfiguration):
    """
    Balanced separator configuration. It should correspond to the separator section.
    """

    max_vertices: int  #: Largest graph given to the exhaustive search.
    p: Fraction  #: Default balance.

    DEFAULT_MAX_VERTICES: int = DEFAULT_SEPARATOR_MAX_VERTICES  #: Default cap.
    DEFAULT_P: Fraction = MIN_P  #: Default balance.

    def from_dict(self, config: dict) -> None:
        """Fill instance from the separator section.

        Args:
            config (dict): dict corresponding to the separator section.

        Raises:
            InvalidRational: if p is not an exact rational in [2/3, 1).
        """
        self.max_vertices = self._cap(config, "max_vertices", self.DEFAULT_MAX_VERTICES)
        self.p = self._rational(config, "p", self.DEFAULT_P)
        if not MIN_P <= self.p < 1:
            raise InvalidRational("p", config.get("p"))

    def __str__(self) -> str:
        res = "=============================\n"
        res += "== Separator Configuration ==\n"
        res += "=============================\n"
        res += f"Max vertices : {self.max_vertices}\n"
        res += f"p : {self.p}\n"
        return res
