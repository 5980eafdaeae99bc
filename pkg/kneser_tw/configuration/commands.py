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
The configuration subcommand of kneser-tw.
"""
import argparse
import shutil
from pathlib import Path

from kneser_tw.utils import KneserPath

#: The commented configuration file shipped with the package.
EXAMPLE_CONFIGURATION = Path(__file__).parent / "config.example.toml"


def create_configuration_file_command(args: argparse.Namespace) -> bool:
    """
    Entry point of ``kneser-tw configuration create``.

    Args:
        args (argparse.Namespace): parsed arguments, with file (str) and override (bool).

    Returns:
        bool: True if the file was written.
    """
    return create_configuration_file(file=args.file, override=args.override)


def create_configuration_file(file: KneserPath, override: bool = False) -> bool:
    """Copy the example configuration, which holds every default value, to file.

    Args:
        file (KneserPath): destination.
        override (bool, optional): replace an existing file. Defaults to False.

    Returns:
        bool: True if the file was written.
    """
    destination = Path(file)
    exists = destination.is_file()
    if exists and not override:
        print(f"[ERROR] {destination} exists already. Add --override to replace it.\n")
        return False
    if exists:
        print(f"[WARNING] Replacing {destination}.\n")

    try:
        shutil.copyfile(EXAMPLE_CONFIGURATION, destination)
    except (shutil.SameFileError, OSError) as exc:
        print(f"[ERROR] Could not write {destination}: {exc}.\n")
        return False
    print(f"[OK] Configuration with the default values written to {destination}.\n")
    return True
