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
Configuration for the verify section.
"""
from fractions import Fraction

from kneser_tw.configuration.base import BaseConfiguration
from kneser_tw.configuration.exceptions import InvalidRational
from kneser_tw.verify import (
    DEFAULT_ENUMERATION_CAP,
    DEFAULT_HORIZON,
    DEFAULT_LN_EPS,
    SuiteOptions,
)


class VerifyConfiguration(BaseConfiguration):
    """
    Verification configuration. It should correspond to the verify section.
    """

    ln_eps: Fraction  #: Width of the ln enclosures.
    horizon: int  #: Last t of the growth certificate of the tail case.
    enumeration_cap: int  #: Largest C(n, k) enumerated by lemma5.
    workers: int  #: Number of threads of the sweeps.

    DEFAULT_LN_EPS: Fraction = DEFAULT_LN_EPS  #: Default enclosure width.
    DEFAULT_HORIZON: int = DEFAULT_HORIZON  #: Default horizon.
    DEFAULT_ENUMERATION_CAP: int = DEFAULT_ENUMERATION_CAP  #: Default enumeration cap.
    DEFAULT_WORKERS: int = 1  #: Default number of threads.

    def from_dict(self, config: dict) -> None:
        """Fill instance from the verify section.

        Args:
            config (dict): dict corresponding to the verify section.

        Raises:
            InvalidRational: if ln_eps is not a positive exact rational.
        """
        self.ln_eps = self._rational(config, "ln_eps", self.DEFAULT_LN_EPS)
        if self.ln_eps <= 0:
            raise InvalidRational("ln_eps", config.get("ln_eps"))
        self.horizon = self._cap(config, "horizon", self.DEFAULT_HORIZON, minimum=24)
        self.enumeration_cap = self._cap(config, "enumeration_cap", self.DEFAULT_ENUMERATION_CAP)
        self.workers = self._cap(config, "workers", self.DEFAULT_WORKERS)

    def suite_options(self) -> SuiteOptions:
        """
        Returns:
            SuiteOptions: the options of the section.
        """
        return SuiteOptions(
            enumeration_cap=self.enumeration_cap,
            ln_eps=self.ln_eps,
            horizon=self.horizon,
            workers=self.workers,
        )

    def __str__(self) -> str:
        res = "==========================\n"
        res += "== Verify Configuration ==\n"
        res += "==========================\n"
        res += f"ln eps : {self.ln_eps}\n"
        res += f"Horizon : {self.horizon}\n"
        res += f"Enumeration cap : {self.enumeration_cap}\n"
        res += f"Workers : {self.workers}\n"
        return res
