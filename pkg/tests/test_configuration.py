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
Tests of the configuration file and its sections.
"""
import logging
from fractions import Fraction
from pathlib import Path

import pytest

from kneser_tw.configuration import Configuration
from kneser_tw.configuration.commands import create_configuration_file
from kneser_tw.configuration.exceptions import InvalidCap, InvalidConfiguration, InvalidRational
from kneser_tw.configuration.graph import MAX_VERTICES_ENV
from kneser_tw.exactsolver import Heuristic, SolveMethod
from kneser_tw.verify import SuiteOptions

EXAMPLE = Path(__file__).parent.parent / "kneser_tw" / "configuration" / "config.example.toml"


@pytest.fixture(autouse=True)
def no_cap_override(monkeypatch):
    monkeypatch.delenv(MAX_VERTICES_ENV, raising=False)


def _write(tmp_path, text):
    path = tmp_path / "config.toml"
    path.write_text(text, encoding="utf-8")
    return path


def test_defaults():
    configuration = Configuration()
    assert configuration.label == Configuration.DEFAULT_LABEL
    assert not configuration.logs.logging
    assert configuration.logs.level == logging.INFO
    assert configuration.graph.max_vertices == 4096
    assert configuration.alpha.max_vertices == 40
    assert configuration.solver.dp_max_vertices == 26
    assert configuration.solver.bnb_max_vertices == 34
    assert configuration.solver.time_limit == 0
    assert configuration.solver.heuristic is Heuristic.MIN_FILL
    assert configuration.separator.p == Fraction(2, 3)
    assert configuration.separator.max_vertices == 20
    assert configuration.verify.suite_options() == SuiteOptions()
    assert repr(configuration) == "Configuration()"
    assert "Loaded from : defaults" in str(configuration)


def test_example_file_is_the_defaults():
    example = Configuration(EXAMPLE)
    defaults = Configuration.from_defaults()
    assert example.label == "Example config"
    assert example.graph.max_vertices == defaults.graph.max_vertices
    assert example.solver.limits() == defaults.solver.limits()
    assert example.separator.p == defaults.separator.p
    assert example.verify.suite_options() == defaults.verify.suite_options()


def test_partial_file(tmp_path):
    path = _write(
        tmp_path,
        '[solver]\ntime_limit = 2.5\nheuristic = "min-degree"\n[verify]\nln_eps = "1/1000"\nworkers = 4\n',
    )
    configuration = Configuration(path)
    limits = configuration.solver.limits(SolveMethod.SUBSET_DP)
    assert limits.time_limit == 2.5
    assert limits.heuristic is Heuristic.MIN_DEGREE
    assert limits.method is SolveMethod.SUBSET_DP
    options = configuration.verify.suite_options()
    assert options.ln_eps == Fraction(1, 1000)
    assert options.workers == 4
    assert options.horizon == 200
    assert configuration.graph.max_vertices == 4096
    assert configuration.to_dict()["verify"]["workers"] == 4


def test_environment_overrides_cap(tmp_path, monkeypatch):
    monkeypatch.setenv(MAX_VERTICES_ENV, "100")
    configuration = Configuration(_write(tmp_path, "[graph]\nmax_vertices = 50\n"))
    assert configuration.graph.max_vertices == 100


@pytest.mark.parametrize("value", ["zero", "0", "-3"])
def test_environment_cap_invalid(monkeypatch, value):
    monkeypatch.setenv(MAX_VERTICES_ENV, value)
    with pytest.raises(InvalidCap) as info:
        Configuration()
    assert info.value.key == MAX_VERTICES_ENV


@pytest.mark.parametrize(
    "text, error",
    [
        ("[graph]\nmax_vertices = 0\n", InvalidCap),
        ("[graph]\nmax_vertices = true\n", InvalidCap),
        ('[alpha]\nmax_vertices = "40"\n', InvalidCap),
        ("[verify]\nhorizon = 23\n", InvalidCap),
        ("[verify]\nln_eps = 0.001\n", InvalidRational),
        ('[verify]\nln_eps = "0"\n', InvalidRational),
        ('[separator]\np = "1/2"\n', InvalidRational),
        ("[separator]\np = 1\n", InvalidRational),
        ('[separator]\np = "2/0"\n', InvalidRational),
        ("[solver]\ntime_limit = -1\n", InvalidConfiguration),
        ('[solver]\nheuristic = "random"\n', InvalidConfiguration),
        ('[logs]\nlevel = "verbose"\n', InvalidConfiguration),
        ("[graph\n", InvalidConfiguration),
    ],
)
def test_invalid_values(tmp_path, text, error):
    with pytest.raises(error):
        Configuration(_write(tmp_path, text))


def test_invalid_message():
    assert str(InvalidCap("workers", 0)) == "workers must be an integer >= 1 (input : 0)"
    assert str(InvalidConfiguration("oops")) == "Invalid configuration: oops"


def test_missing_file(tmp_path):
    with pytest.raises(InvalidConfiguration):
        Configuration(tmp_path / "missing.toml")


def test_create_configuration_file(tmp_path, capsys):
    path = tmp_path / "config.toml"
    assert create_configuration_file(path)
    assert "[OK]" in capsys.readouterr().out
    assert path.read_text(encoding="utf-8") == EXAMPLE.read_text(encoding="utf-8")

    assert not create_configuration_file(path)
    assert "[ERROR]" in capsys.readouterr().out

    assert create_configuration_file(path, override=True)
    assert "[WARNING]" in capsys.readouterr().out
