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
Tests of the kneser-tw command line, through its main function.
"""
import json
import logging

import pytest

from kneser_tw import __version__
from kneser_tw.codes import ExitCode
from kneser_tw.commands import main
from kneser_tw.configuration.graph import MAX_VERTICES_ENV


@pytest.fixture(autouse=True)
def workspace(tmp_path, monkeypatch):
    """Run every command in an empty directory and restore the root logger afterwards."""
    monkeypatch.chdir(tmp_path)
    monkeypatch.delenv(MAX_VERTICES_ENV, raising=False)
    root = logging.getLogger("")
    handlers, level = list(root.handlers), root.level
    yield tmp_path
    for handler in root.handlers[:]:
        if handler not in handlers:
            root.removeHandler(handler)
    root.setLevel(level)


def test_version(capsys):
    assert main(["--version"]) == 0
    assert __version__ in capsys.readouterr().out


def test_no_command(capsys):
    assert main([]) == ExitCode.USAGE_ERROR
    assert "No command specified" in capsys.readouterr().out


def test_unknown_command():
    assert main(["colour"]) == ExitCode.USAGE_ERROR


def test_info(capsys):
    assert main(["info"]) == ExitCode.SUCCESS
    assert __version__ in capsys.readouterr().out


def test_graph(workspace, capsys):
    assert main(["graph", "5", "2", "1", "--labels", "petersen.labels"]) == ExitCode.SUCCESS
    lines = (workspace / "kneser_5_2_1.gr").read_text(encoding="utf-8").splitlines()
    assert lines[:2] == ["c K(5,2,1)", "p tw 10 15"]
    assert (workspace / "petersen.labels").read_text(encoding="utf-8").startswith("1 {1,2}\n")
    assert "10 vertices, 15 edges" in capsys.readouterr().out


def test_graph_invalid_parameters(workspace, capsys):
    assert main(["graph", "4", "3", "2"]) == ExitCode.USAGE_ERROR
    assert "n>2k-t" in capsys.readouterr().err
    assert not list(workspace.iterdir())


def test_graph_over_cap(workspace, monkeypatch):
    monkeypatch.setenv(MAX_VERTICES_ENV, "5")
    assert main(["graph", "5", "2", "1"]) == ExitCode.USAGE_ERROR
    assert not (workspace / "kneser_5_2_1.gr").exists()


def test_solve_petersen(workspace, capsys):
    assert main(["graph", "5", "2", "1", "-o", "petersen.gr"]) == ExitCode.SUCCESS
    assert main(["solve", "petersen.gr", "--report", "solve.json"]) == ExitCode.SUCCESS
    assert "treewidth 4" in capsys.readouterr().out
    assert (workspace / "petersen.td").exists()
    data = json.loads((workspace / "solve.json").read_text(encoding="utf-8"))
    assert data["solver"]["treewidth"] == "4"
    assert data["solver"]["exact"] is True
    assert set(data["timings"]) == {"solver", "total"}

    assert main(["validate", "petersen.gr", "petersen.td"]) == ExitCode.SUCCESS
    assert capsys.readouterr().out.strip() == "width 4"


def test_solve_time_limit(workspace, capsys):
    main(["graph", "6", "3", "2", "-o", "k632.gr"])
    assert main(["solve", "k632.gr", "--time-limit", "1e-9"]) == ExitCode.RESOURCE_LIMIT
    assert "not exact" in capsys.readouterr().out


def test_solve_truncated_file(workspace, capsys):
    (workspace / "broken.gr").write_text("p tw 10 15\n1 6\n", encoding="utf-8")
    assert main(["solve", "broken.gr"]) == ExitCode.USAGE_ERROR
    assert "15 edges declared, 1 found" in capsys.readouterr().err


def test_solve_missing_file():
    assert main(["solve", "missing.gr"]) == ExitCode.USAGE_ERROR


def test_validate_reports_violations(workspace, capsys):
    main(["graph", "5", "2", "1", "-o", "petersen.gr"])
    (workspace / "bad.td").write_text("s td 1 2 10\nb 1 1 6\n", encoding="utf-8")
    assert main(["validate", "petersen.gr", "bad.td"]) == ExitCode.CHECK_FAILED
    out = capsys.readouterr().out
    assert "[FAIL] missing vertex 2" in out
    assert "[FAIL] uncovered edge 0 8" in out


def test_alpha(capsys):
    assert main(["alpha", "5", "2", "1"]) == ExitCode.SUCCESS
    out = capsys.readouterr().out.splitlines()
    assert out[0] == "alpha 4"
    assert out[1] == "witness {1,2} {1,3} {1,4} {1,5}"
    assert out[2] == "pencil size 4"


def test_decompose(workspace, capsys):
    assert main(["decompose", "6", "3", "2", "--base", "2,3"]) == ExitCode.SUCCESS
    out = capsys.readouterr().out
    assert out.startswith("width 15 (independent set of size 4)")
    assert "C(n,k) - C(n-t,k-t) - 1 = 15" in out
    assert (workspace / "kneser_6_3_2.td").read_text(encoding="utf-8").startswith("c K(6,3,2)\ns td 5 16 20\n")


def test_decompose_maximum(workspace, capsys):
    assert main(["decompose", "5", "2", "1", "--maximum", "--td", "star.td"]) == ExitCode.SUCCESS
    assert capsys.readouterr().out.startswith("width 5")
    main(["graph", "5", "2", "1", "-o", "petersen.gr"])
    assert main(["validate", "petersen.gr", "star.td"]) == ExitCode.SUCCESS


def test_separator(workspace, capsys):
    (workspace / "path.gr").write_text("p tw 5 4\n1 2\n2 3\n3 4\n4 5\n", encoding="utf-8")
    assert main(["separator", "path.gr"]) == ExitCode.SUCCESS
    assert capsys.readouterr().out.strip() == "separator size 1: 3"


def test_separator_invalid_balance(workspace):
    (workspace / "path.gr").write_text("p tw 3 2\n1 2\n2 3\n", encoding="utf-8")
    assert main(["separator", "path.gr", "-p", "1/2"]) == ExitCode.USAGE_ERROR


def test_probe(workspace, capsys):
    assert main(["probe", "5", "2", "1", "--td", "probe.td"]) == ExitCode.SUCCESS
    out = capsys.readouterr().out
    assert "treewidth 4" in out
    assert "C(n,k) - C(n-t,k-t) - 1 = 5" in out
    assert out.strip().endswith("not equal")
    assert (workspace / "probe.td").exists()


def test_verify_thresholds(workspace, capsys):
    code = main(["verify", "thresholds", "--c", "1..2", "-o", "thresholds.json"])
    assert code == ExitCode.SUCCESS
    out = capsys.readouterr().out
    assert "[PASS] threshold (c=1, window=3..48): 12 <= 12" in out
    assert "suite thresholds: 2 checks, 0 failed" in out
    data = json.loads((workspace / "thresholds.json").read_text(encoding="utf-8"))
    assert data["params"]["ranges"] == {"c": "1..2"}
    assert [check["lhs"] for check in data["checks"]] == ["12", "54"]


def test_verify_failure(capsys):
    assert main(["verify", "theorem9", "--n", "5", "--k", "3", "--t", "2"]) == ExitCode.CHECK_FAILED
    out = capsys.readouterr().out
    assert "[FAIL] eqns1 (n=5, k=3, t=2): 5 >= 6" in out
    assert "suite theorem9: 3 checks, 2 failed" in out


def test_verify_cases(capsys):
    assert main(["verify", "cases", "--t", "2..24", "--workers", "4"]) == ExitCode.SUCCESS
    assert "23 checks, 0 failed" in capsys.readouterr().out


def test_verify_unwritable_report(workspace, capsys):
    path = workspace / "missing" / "run.json"
    assert main(["verify", "cases", "--t", "2", "-o", str(path)]) == ExitCode.USAGE_ERROR
    assert "could not be written" in capsys.readouterr().err
    assert not path.exists()


def test_verify_unknown_parameter(capsys):
    assert main(["verify", "cases", "--n", "3"]) == ExitCode.USAGE_ERROR
    assert "has no parameter n" in capsys.readouterr().err


def test_verify_bad_range():
    assert main(["verify", "cases", "--t", "9..2"]) == ExitCode.USAGE_ERROR


def test_report_comparison(workspace, capsys):
    command = ["verify", "bounds", "--k", "10", "--t", "5", "-o", "run.json"]
    assert main(command) == ExitCode.SUCCESS
    (workspace / "run.json").rename(workspace / "first.json")
    assert main(command) == ExitCode.SUCCESS
    main(["verify", "bounds", "--k", "3", "--t", "2", "-o", "other.json"])
    capsys.readouterr()

    assert main(["report", "first.json"]) == ExitCode.SUCCESS
    assert "Canonical hash" in capsys.readouterr().out
    assert main(["report", "first.json", "run.json"]) == ExitCode.SUCCESS
    assert main(["report", "first.json", "other.json"]) == ExitCode.CHECK_FAILED
    assert main(["report", "first.json", "missing.json"]) == ExitCode.USAGE_ERROR


def test_invalid_configuration(workspace, capsys):
    (workspace / "config.toml").write_text("[solver]\ntime_limit = -1\n", encoding="utf-8")
    assert main(["-c", "config.toml", "info"]) == ExitCode.USAGE_ERROR
    assert "time_limit" in capsys.readouterr().err


def test_configuration_create(workspace):
    assert main(["configuration", "create", "-f", "kneser.toml"]) == ExitCode.SUCCESS
    assert main(["configuration", "create", "-f", "kneser.toml"]) == ExitCode.USAGE_ERROR
    assert main(["-c", "kneser.toml", "info"]) == ExitCode.SUCCESS


def test_solve_complete_graph(workspace, capsys):
    lines = ["p tw 6 15"] + [f"{u} {v}" for u in range(1, 7) for v in range(u + 1, 7)]
    (workspace / "k6.gr").write_text("\n".join(lines) + "\n", encoding="utf-8")
    assert main(["solve", "k6.gr"]) == ExitCode.SUCCESS
    assert capsys.readouterr().out.strip() == "treewidth 5"
