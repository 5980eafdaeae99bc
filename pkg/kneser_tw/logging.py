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
Logging of kneser-tw.

The number of -v flags sets the level of the console handler. The file
handler, enabled in the logs section of the configuration, has its own level.
Handlers installed by an earlier call are replaced, so that the entry point
can run several times in the same process.
"""
import logging
from typing import Optional, Tuple

from kneser_tw.configuration import Configuration

#: Console level for 0, 1 and 2 -v flags. More flags give DEBUG.
VERBOSITY_LEVELS = (logging.CRITICAL, logging.WARNING, logging.INFO)

LOG_FORMAT = "%(asctime)s - %(name)s - %(levelname)s - %(message)s"

_CONSOLE_HANDLER_NAME = "kneser-tw-console"
_FILE_HANDLER_NAME = "kneser-tw-file"


def verbose_to_log_level(verbose: int) -> int:
    """Console log level for a verbosity level.

    * no -v: critical logs only;
    * -v: warnings and errors too;
    * -vv: info too;
    * -vvv and more: everything.

    Args:
        verbose (int): the number of -v flags.

    Returns:
        int: the log level.
    """
    if verbose < len(VERBOSITY_LEVELS):
        return VERBOSITY_LEVELS[max(verbose, 0)]
    return logging.DEBUG


def _replace_handler(root: logging.Logger, handler: logging.Handler, name: str, level: int) -> None:
    for old in [h for h in root.handlers if h.get_name() == name]:
        root.removeHandler(old)
        old.close()
    handler.set_name(name)
    handler.setLevel(level)
    handler.setFormatter(logging.Formatter(LOG_FORMAT))
    root.addHandler(handler)


def create_loggers(
    verbose: int, configuration: Optional[Configuration] = None
) -> Tuple[logging.Logger, logging.Handler, Optional[logging.Handler]]:
    """Configure the root logger: a console handler and, if the logs section
    enables it, a file handler.

    Args:
        verbose (int): the number of -v flags.
        configuration (Configuration, optional): the configuration. If None, nothing is logged to a file.

    Returns:
        Tuple[logging.Logger, logging.Handler, Optional[logging.Handler]]: the root logger, the console handler and the file handler (None without file logging).
    """
    root = logging.getLogger("")
    console_level = verbose_to_log_level(verbose)
    console = logging.StreamHandler()
    _replace_handler(root, console, _CONSOLE_HANDLER_NAME, console_level)

    if configuration is None or not configuration.logs.logging:
        root.setLevel(console_level)
        return root, console, None

    logs = configuration.logs
    log_file = logging.FileHandler(logs.path)
    _replace_handler(root, log_file, _FILE_HANDLER_NAME, logs.level)
    root.setLevel(min(console_level, logs.level))
    return root, console, log_file
