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
Configuration for the graph and alpha sections.
"""
import logging
import os

from kneser_tw.configuration.base import BaseConfiguration
from kneser_tw.configuration.exceptions import InvalidCap
from kneser_tw.kneser import DEFAULT_ALPHA_MAX_VERTICES, DEFAULT_MAX_VERTICES

logger = logging.getLogger(__name__)

MAX_VERTICES_ENV = "KNESERTW_MAX_VERTICES"  #: Environment variable overriding graph.max_vertices.


class GraphConfiguration(BaseConfiguration):
    """
    Graph configuration. It should correspond to the graph section.

    The environment variable ``KNESERTW_MAX_VERTICES`` takes precedence over the file.
    """

    max_vertices: int  #: Largest graph whose adjacency is materialized.

    DEFAULT_MAX_VERTICES: int = DEFAULT_MAX_VERTICES  #: Default materialization cap.

    def from_dict(self, config: dict) -> None:
        """Fill instance from the graph section.

        Args:
            config (dict): dict corresponding to the graph section.

        Raises:
            InvalidCap: if the cap (from the file or the environment) is not a positive integer.
        """
        self.max_vertices = self._cap(config, "max_vertices", self.DEFAULT_MAX_VERTICES)

        env_value = os.environ.get(MAX_VERTICES_ENV)
        if env_value is not None:
            try:
                override = int(env_value)
            except ValueError as exc:
                raise InvalidCap(MAX_VERTICES_ENV, env_value) from exc
            if override < 1:
                raise InvalidCap(MAX_VERTICES_ENV, env_value)
            logger.info("Materialization cap overridden by %s=%i", MAX_VERTICES_ENV, override)
            self.max_vertices = override

    def __str__(self) -> str:
        res = "=========================\n"
        res += "== Graph Configuration ==\n"
        res += "=========================\n"
        res += f"Max vertices : {self.max_vertices}\n"
        return res


class AlphaConfiguration(BaseConfiguration):
    """
    Independence number configuration. It should correspond to the alpha section.
    """

    max_vertices: int  #: Largest graph given to the brute-force search.

    DEFAULT_MAX_VERTICES: int = DEFAULT_ALPHA_MAX_VERTICES  #: Default cap.

    def from_dict(self, config: dict) -> None:
        """Fill instance from the alpha section.

        Args:
            config (dict): dict corresponding to the alpha section.
        """
        self.max_vertices = self._cap(config, "max_vertices", self.DEFAULT_MAX_VERTICES)

    def __str__(self) -> str:
        res = "=========================\n"
        res += "== Alpha Configuration ==\n"
        res += "=========================\n"
        res += f"Max vertices : {self.max_vertices}\n"
        return res
