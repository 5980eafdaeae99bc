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
This is the definition of the configuration classes of kneser-tw.

Each class corresponds to a section in the .toml configuration file.

The main configuration class is parent to the other configuration classes.
Every section is optional, missing keys take their default value.
"""

from typing import Optional
import logging

import toml

from kneser_tw.configuration.logs import LogsConfiguration
from kneser_tw.configuration.graph import AlphaConfiguration, GraphConfiguration
from kneser_tw.configuration.solver import SeparatorConfiguration, SolverConfiguration
from kneser_tw.configuration.verify import VerifyConfiguration
from kneser_tw.configuration.exceptions import InvalidConfiguration
from kneser_tw.utils import KneserPath

logger = logging.getLogger(__name__)


class PickleableTomlDecoder(toml.TomlDecoder):
    """
    The default toml decoder is not picklable only because of the
    get_empty_inline_table function (see https://github.com/uiri/toml/issues/362).
    """

    def get_empty_inline_table(self):
        """
        Reimplementation of the get_empty_inline_table to be picklable.
        """
        return self.get_empty_table()


# pylint: disable=too-many-instance-attributes
class Configuration:
    """
    The main class of the configuration.

    The configuration file should be a valid toml file.

    Example of use :

    .. code-block::

        c = Configuration("config.toml")
        print(c.graph.max_vertices)
        print(c.solver.limits())

        defaults = Configuration()
    """

    _config_path: Optional[KneserPath]  #: Initial path of the configuration, None for the defaults.
    _config: Optional[dict]  #: dict representing the configuration.
    label: str  #: Label of the configuration.
    logs: LogsConfiguration  #: Logs configuration.
    graph: GraphConfiguration  #: Graph configuration.
    alpha: AlphaConfiguration  #: Independence number configuration.
    solver: SolverConfiguration  #: Exact solver configuration.
    separator: SeparatorConfiguration  #: Balanced separator configuration.
    verify: VerifyConfiguration  #: Verification configuration.

    DEFAULT_LABEL: str = "Default configuration"  #: Default label.

    def __init__(self, config_path: Optional[KneserPath] = None) -> None:
        """
        Args:
            config_path (KneserPath, optional): path of the configuration file. If None, the defaults are used.

        Raises:
            InvalidConfiguration: if the file cannot be read or decoded.
        """
        self._config_path = config_path
        self._config = None

        if config_path is None:
            config: dict = {}
        else:
            try:
                config = toml.load(str(config_path), decoder=PickleableTomlDecoder())
            except toml.TomlDecodeError as exc:
                raise InvalidConfiguration("The TOML file is not readable.") from exc
            except FileNotFoundError as exc:
                raise InvalidConfiguration(f"The file {config_path} does not exist.") from exc

        self.from_dict(config)

    @classmethod
    def from_defaults(cls) -> "Configuration":
        """
        Returns:
            Configuration: the configuration with every default value.
        """
        return cls()

    def to_dict(self) -> Optional[dict]:
        """
        Return config as a dict.

        Returns:
            dict: dict holding the config.
        """
        return self._config

    def from_dict(self, config: dict) -> None:
        """Fill the config from a dict. It should correspond to the configuration file.

        If the current config is being overwritten, a warning message is issued.

        Args:
            config (dict): the dict holding the config.
        """
        if config != self._config and self._config is not None:
            logger.warning("Overwriting config.")
        self._config = config
        self.label = config.get("label", self.DEFAULT_LABEL)

        self.logs = LogsConfiguration(config.get("logs", {}))
        self.graph = GraphConfiguration(config.get("graph", {}))
        self.alpha = AlphaConfiguration(config.get("alpha", {}))
        self.solver = SolverConfiguration(config.get("solver", {}))
        self.separator = SeparatorConfiguration(config.get("separator", {}))
        self.verify = VerifyConfiguration(config.get("verify", {}))

    def __repr__(self) -> str:
        if self._config_path is None:
            return "Configuration()"
        return f'Configuration("{self._config_path}")'

    def __str__(self) -> str:
        origin = self._config_path if self._config_path is not None else "defaults"
        res = f"Configuration : {self.label} (Loaded from : {origin})\n"
        res += "\n"
        res += str(self.logs)
        res += "\n"
        res += str(self.graph)
        res += "\n"
        res += str(self.alpha)
        res += "\n"
        res += str(self.solver)
        res += "\n"
        res += str(self.separator)
        res += "\n"
        res += str(self.verify)
        return res
