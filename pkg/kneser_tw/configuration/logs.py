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
Configuration of the log file.
"""
import logging
from typing import Dict

from kneser_tw.configuration.base import BaseConfiguration
from kneser_tw.configuration.exceptions import InvalidConfiguration

#: Accepted names of the file log level.
LEVELS: Dict[str, int] = {
    "debug": logging.DEBUG,
    "info": logging.INFO,
    "warning": logging.WARNING,
    "error": logging.ERROR,
    "critical": logging.CRITICAL,
}


class LogsConfiguration(BaseConfiguration):
    """
    Log file configuration. It should correspond to the logs section.
    """

    logging: bool  #: True to also log to a file.
    path: str  #: Path of the log file.
    level: int  #: Level of the file handler.
    level_name: str  #: Name of the level, as written in the file.

    DEFAULT_LOGGING: bool = False  #: Default for logging.
    DEFAULT_PATH: str = "kneser_tw.log"  #: Default log file.
    DEFAULT_LEVEL_NAME: str = "info"  #: Default level name.

    def from_dict(self, config: dict) -> None:
        """Read the logs section.

        Args:
            config (dict): the logs section.

        Raises:
            InvalidConfiguration: on an unknown level name.
        """
        self.logging = bool(config.get("logging", self.DEFAULT_LOGGING))
        self.path = str(config.get("path", self.DEFAULT_PATH))
        self.level_name = str(config.get("level", self.DEFAULT_LEVEL_NAME)).lower()
        if self.level_name not in LEVELS:
            raise InvalidConfiguration(
                f"unknown log level {self.level_name!r} (choose among {', '.join(LEVELS)})"
            )
        self.level = LEVELS[self.level_name]

    def __str__(self) -> str:
        res = "========================\n"
        res += "== Logs Configuration ==\n"
        res += "========================\n"
        res += f"Log to file : {self.logging}\n"
        res += f"File : {self.path}\n"
        res += f"Level : {self.level_name}\n"
        return res
