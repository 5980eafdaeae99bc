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
Banner and information on the installed stack, for the info command.
"""
import sys
from importlib.metadata import PackageNotFoundError, version
from typing import Optional

from kneser_tw import RELEASE_NAME, __version__
from kneser_tw.configuration import Configuration

MOTD: str = """
 _                                  _
| | ___ __   ___  ___  ___ _ __    | |___      __
| |/ / '_ \\ / _ \\/ __|/ _ \\ '__|___| __\\ \\ /\\ / /
|   <| | | |  __/\\__ \\  __/ | |____| |_ \\ V  V /
|_|\\_\\_| |_|\\___||___/\\___|_|       \\__| \\_/\\_/

This program is distributed in the hope that it will be useful,
but WITHOUT ANY WARRANTY; without even the implied warranty of
MERCHANTABILITY or FITNESS FOR A PARTICULAR PURPOSE.  See the
GNU General Public License for more details.
"""

STACK = ("numpy", "networkx", "toml")  #: Runtime dependencies reported by info.


def _installed_version(package: str) -> str:
    try:
        return version(package)
    except PackageNotFoundError:
        return "Not installed"


def get_script_infos(configuration: Optional[Configuration] = None, motd: bool = True) -> str:
    """
    Get information on the installed software.

    Args:
        configuration (Configuration, optional): a configuration object that will be printed if given. Defaults to None.
        motd (bool, optional): if True, the banner is included. Defaults to True.

    Returns:
        str: banner, versions and optionally the configuration.
    """
    res: str = ""
    if motd:
        res += MOTD

    res += f"python version: {sys.version}\n\n"

    res += "kneser-tw versions\n"
    res += f"kneser_tw: {__version__} ({RELEASE_NAME})\n"
    for package in STACK:
        res += f"{package}: {_installed_version(package)}\n"

    if configuration:
        res += "\n"
        res += str(configuration)
    return res
