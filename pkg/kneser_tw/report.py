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
Persistent run reports.

Reports are JSON files in which no float appears outside of the timings:
integers are written as decimal strings and rationals as "num/den" strings.
The canonical form leaves the timings out, sorts the keys and has no
whitespace, so that identical runs have identical canonical hashes.
"""
import datetime
import hashlib
import json
import logging
from enum import Enum
from fractions import Fraction
from typing import Any, Dict, List, Optional

from kneser_tw import __version__
from kneser_tw.utils import KneserPath, format_range
from kneser_tw.verify import ConditionReport

logger = logging.getLogger(__name__)


def encode_value(value: Any) -> Any:
    """
    Convert a value to exact JSON data.

    Args:
        value (Any): the value.

    Raises:
        TypeError: on floats and unsupported types.

    Returns:
        Any: the JSON-compatible value.
    """
    if value is None or isinstance(value, (bool, str)):
        return value
    if isinstance(value, Enum):
        return value.value
    if isinstance(value, int):
        return str(value)
    if isinstance(value, Fraction):
        if value.denominator == 1:
            return str(value.numerator)
        return f"{value.numerator}/{value.denominator}"
    if isinstance(value, range):
        return format_range(value)
    if isinstance(value, dict):
        return {str(key): encode_value(item) for key, item in value.items()}
    if isinstance(value, (list, tuple, set, frozenset)):
        items = sorted(value) if isinstance(value, (set, frozenset)) else value
        return [encode_value(item) for item in items]
    raise TypeError(f"Cannot encode {value!r} ({type(value).__name__}) exactly.")


def encode_timings(timings: Dict[str, float]) -> Dict[str, str]:
    """
    Args:
        timings (Dict[str, float]): durations in seconds.

    Returns:
        Dict[str, str]: durations as decimal strings with microsecond resolution.
    """
    return {name: f"{seconds:.6f}" for name, seconds in timings.items()}


class RunReport:
    """
    Record of a command run: version, command line, parameters, check reports
    and solver results, plus the timings kept apart from the rest.

    Example:

    .. code-block:: python

        report = RunReport(["verify", "thresholds"], {"suite": "thresholds"})
        report.checks.extend(run_suite(Suite.THRESHOLDS).reports)
        report.save("thresholds.json")
        RunReport.load("thresholds.json").canonical_hash() == report.canonical_hash() # True
    """

    version: str  #: Version of kneser-tw that produced the report.
    command: List[str]  #: Command line echo.
    params: Dict[str, Any]  #: Parameters, with every default made explicit.
    checks: List[ConditionReport]  #: Verification reports.
    solver: Optional[Dict[str, Any]]  #: Solver or construction results.
    timings: Dict[str, float]  #: Wall-clock durations in seconds.
    _saved_path: Optional[KneserPath]  #: Path were the report was saved to or loaded from.
    _saved_datetime: Optional[datetime.datetime]  #: Datetime of the last save.
    _loaded: bool  #: True if the report was loaded from a file.

    def __init__(
        self,
        command: List[str],
        params: Optional[Dict[str, Any]] = None,
        version: str = __version__,
    ):
        """
        Args:
            command (List[str]): command line echo.
            params (Dict[str, Any], optional): parameters. Defaults to None.
            version (str, optional): tool version. Defaults to the installed version.
        """
        self.version = version
        self.command = list(command)
        self.params = dict(params or {})
        self.checks = []
        self.solver = None
        self.timings = {}
        self._saved_path = None
        self._saved_datetime = None
        self._loaded = False

    @property
    def passed(self) -> bool:
        """True if every check passed."""
        return all(check.passed for check in self.checks)

    def to_dict(self, include_timings: bool = True) -> Dict[str, Any]:
        """
        Args:
            include_timings (bool, optional): whether to include the timings. Defaults to True.

        Returns:
            Dict[str, Any]: the encoded report.
        """
        data = {
            "version": self.version,
            "command": encode_value(self.command),
            "params": encode_value(self.params),
            "checks": [encode_value(check.as_dict()) for check in self.checks],
            "solver": encode_value(self.solver),
        }
        if include_timings:
            data["timings"] = encode_timings(self.timings)
        return data

    def canonical_json(self) -> str:
        """
        Returns:
            str: the report without timings, sorted keys and no whitespace.
        """
        return json.dumps(self.to_dict(include_timings=False), sort_keys=True, separators=(",", ":"))

    def canonical_hash(self) -> str:
        """
        Returns:
            str: hex SHA-256 of the canonical JSON.
        """
        return hashlib.sha256(self.canonical_json().encode("utf-8")).hexdigest()

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> "RunReport":
        """
        Args:
            data (Dict[str, Any]): an encoded report.

        Returns:
            RunReport: the report. Parameters and solver results stay encoded.
        """
        report = cls(list(data.get("command", [])), data.get("params", {}), data["version"])
        report.checks = [ConditionReport.from_dict(check) for check in data.get("checks", [])]
        report.solver = data.get("solver")
        report.timings = {name: float(value) for name, value in data.get("timings", {}).items()}
        return report

    @staticmethod
    def load(path: KneserPath) -> Optional["RunReport"]:
        """
        Load a report.

        Args:
            path (KneserPath): the path of the file to load.

        Returns:
            RunReport: the report, None if the file could not be read.
        """
        try:
            with open(path, "r", encoding="utf-8") as file:
                report = RunReport.from_dict(json.load(file))
        except IOError as exc:
            logger.critical("Loading report at location %s failed: %s", str(path), str(exc))
            return None
        logger.info("Loaded report from location %s", str(path))
        report._saved_path = path
        report._loaded = True
        return report

    def dump(self, path: KneserPath) -> bool:
        """
        Write the report as indented JSON.

        Args:
            path (KneserPath): the path where to save the report.

        Returns:
            bool: True if the report was written, False otherwise.
        """
        try:
            with open(path, "w", encoding="utf-8", newline="\n") as file:
                json.dump(self.to_dict(), file, sort_keys=True, indent=2)
                file.write("\n")
        except IOError as exc:
            self._saved_datetime = None
            self._saved_path = None
            logger.critical("Saving report to location %s failed: %s", str(path), str(exc))
            return False
        self._saved_datetime = datetime.datetime.now()
        self._saved_path = path
        self._loaded = False
        logger.info("Saved report to location %s", str(path))
        return True

    def save(self, path: KneserPath) -> bool:
        """
        Alias of dump.

        Args:
            path (KneserPath): the path where to save the report.

        Returns:
            bool: True if the report was written, False otherwise.
        """
        return self.dump(path)

    def summary(self) -> str:
        """
        Returns:
            str: a human readable summary.
        """
        failed = sum(1 for check in self.checks if not check.passed)
        res = f"kneser-tw {self.version}: {' '.join(self.command)}\n"
        res += f"Checks: {len(self.checks)} ({failed} failed)\n"
        if self.solver is not None:
            res += f"Solver: {json.dumps(encode_value(self.solver), sort_keys=True)}\n"
        res += f"Canonical hash: {self.canonical_hash()}\n"
        return res

    def __str__(self) -> str:
        return self.summary()
