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
Entry point of the kneser-tw command.

Every command returns an :class:`kneser_tw.codes.ExitCode`: 0 when everything
passed, 1 when a check or a validation failed, 2 on a usage or input error and
3 when a resource limit stopped a computation.
"""
import argparse
import dataclasses
import logging
import sys
import time
from pathlib import Path
from typing import Any, Dict, List, Optional

from kneser_tw import __version__
from kneser_tw.codes import ExitCode
from kneser_tw.configuration import Configuration
from kneser_tw.configuration.commands import create_configuration_file_command
from kneser_tw.configuration.exceptions import InvalidConfiguration
from kneser_tw.exactsolver import (
    Heuristic,
    SolveMethod,
    exact_treewidth,
    min_balanced_separator,
    probe_upper_bound,
)
from kneser_tw.exceptions import CapExceeded, KneserTWError, ThresholdNotFound
from kneser_tw.infos import MOTD, get_script_infos
from kneser_tw.kneser import (
    KneserParams,
    brute_force_alpha,
    build_graph,
    crowded_set_size,
    max_degree_formula,
    pencil_independent_set,
)
from kneser_tw.logging import create_loggers
from kneser_tw.pace import read_gr, read_td, write_gr, write_labels, write_td
from kneser_tw.report import RunReport
from kneser_tw.tdecomp import star_decomposition, upper_bound_formula, validate_decomposition
from kneser_tw.utils import format_range, parse_range, parse_rational
from kneser_tw.verify import SUITE_PARAMETERS, ConditionId, Suite, run_suite

logger = logging.getLogger(__name__)


def _add_params_arguments(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("n", type=int, help="Size of the ground set.")
    parser.add_argument("k", type=int, help="Size of the subsets.")
    parser.add_argument("t", type=int, help="Two subsets are adjacent if they share less than t elements.")


def _add_report_argument(parser: argparse.ArgumentParser) -> None:
    parser.add_argument(
        "--report",
        default=None,
        help="If given, the JSON run report is written at this path.",
    )


def _create_main_parser() -> argparse.ArgumentParser:
    """
    Create the main parser.

    Commands:
        info (alias: versions)
        graph
        solve
        validate
        alpha
        decompose
        separator
        probe
        verify
        report

    Returns:
        argparse.ArgumentParser: the main parser.
    """
    parser = argparse.ArgumentParser(prog="kneser-tw")

    parser.add_argument("--version", action="version", version=__version__)
    parser.add_argument(
        "-v",
        "--verbose",
        action="count",
        default=0,
        help="Level of verbosity. If none, only critical errors will be prompted. -v will add warnings and errors, -vv will add info and -vvv will print all debug logs.",
    )
    parser.add_argument(
        "-c",
        "--config",
        default=None,
        help="Path of the configuration file. If absent, every default value is used.",
    )

    subparsers = parser.add_subparsers()

    info_parser = subparsers.add_parser(
        "info", aliases=["versions"], help="Display info on the package"
    )
    info_parser.set_defaults(func=info)

    graph_parser = subparsers.add_parser("graph", help="Write K(n,k,t) as a PACE .gr file")
    _add_params_arguments(graph_parser)
    graph_parser.add_argument(
        "-o", "--out", default=None, help="Path of the .gr file. Default : kneser_<n>_<k>_<t>.gr."
    )
    graph_parser.add_argument(
        "--labels", default=None, help="If given, the table vertex -> subset is written at this path."
    )
    _add_report_argument(graph_parser)
    graph_parser.set_defaults(func=graph_command)

    solve_parser = subparsers.add_parser(
        "solve", help="Compute the exact treewidth of a .gr file"
    )
    solve_parser.add_argument("gr", help="Path of the .gr file.")
    solve_parser.add_argument(
        "--td", default=None, help="Path of the certificate. Default : the .gr path with the .td suffix."
    )
    solve_parser.add_argument(
        "--method",
        choices=[method.value for method in SolveMethod],
        default=None,
        help="Force a method. Default : chosen by the size of the graph.",
    )
    solve_parser.add_argument(
        "--time-limit", type=float, default=None, help="Time limit in seconds, 0 for none."
    )
    solve_parser.add_argument(
        "--heuristic",
        choices=[heuristic.value for heuristic in Heuristic],
        default=None,
        help="Heuristic of the initial upper bound.",
    )
    _add_report_argument(solve_parser)
    solve_parser.set_defaults(func=solve_command)

    validate_parser = subparsers.add_parser(
        "validate", help="Validate a .td file against a .gr file"
    )
    validate_parser.add_argument("gr", help="Path of the .gr file.")
    validate_parser.add_argument("td", help="Path of the .td file.")
    _add_report_argument(validate_parser)
    validate_parser.set_defaults(func=validate_command)

    alpha_parser = subparsers.add_parser(
        "alpha", help="Exact independence number of K(n,k,t)"
    )
    _add_params_arguments(alpha_parser)
    _add_report_argument(alpha_parser)
    alpha_parser.set_defaults(func=alpha_command)

    decompose_parser = subparsers.add_parser(
        "decompose", help="Star decomposition of K(n,k,t) around an independent set"
    )
    _add_params_arguments(decompose_parser)
    decompose_parser.add_argument(
        "--base",
        default=None,
        help="Comma separated t-subset of [n] whose pencil is used. Default : 1,...,t.",
    )
    decompose_parser.add_argument(
        "--maximum",
        action="store_true",
        help="Use a maximum independent set found by brute force instead of a pencil.",
    )
    decompose_parser.add_argument(
        "--td", default=None, help="Path of the .td file. Default : kneser_<n>_<k>_<t>.td."
    )
    _add_report_argument(decompose_parser)
    decompose_parser.set_defaults(func=decompose_command)

    separator_parser = subparsers.add_parser(
        "separator", help="Minimum balanced separator of a .gr file"
    )
    separator_parser.add_argument("gr", help="Path of the .gr file.")
    separator_parser.add_argument(
        "-p", default=None, help='Balance as "num/den", in [2/3, 1). Default : from the configuration.'
    )
    _add_report_argument(separator_parser)
    separator_parser.set_defaults(func=separator_command)

    probe_parser = subparsers.add_parser(
        "probe",
        help="Compare the exact treewidth of K(n,k,t) with C(n,k) - C(n-t,k-t) - 1",
    )
    _add_params_arguments(probe_parser)
    probe_parser.add_argument("--td", default=None, help="If given, the certificate is written at this path.")
    _add_report_argument(probe_parser)
    probe_parser.set_defaults(func=probe_command)

    verify_parser = subparsers.add_parser("verify", help="Run a verification suite")
    verify_parser.add_argument(
        "suite", choices=[suite.value for suite in Suite], help="Suite to run."
    )
    for name in ("n", "k", "t", "c"):
        verify_parser.add_argument(
            f"--{name}",
            type=parse_range,
            default=None,
            help=f'Range of {name} as "a..b" or "a". Default : the suite default.',
        )
    verify_parser.add_argument(
        "--workers", type=int, default=None, help="Number of worker threads."
    )
    verify_parser.add_argument(
        "-a", "--all", action="store_true", help="Print every report and not only the failures."
    )
    verify_parser.add_argument(
        "-o",
        "--out",
        "--report",
        dest="report",
        default=None,
        help="If given, the JSON run report is written at this path.",
    )
    verify_parser.set_defaults(func=verify_command)

    report_parser = subparsers.add_parser(
        "report", help="Summarize a stored run report, or compare two of them"
    )
    report_parser.add_argument("path", help="Path of the report.")
    report_parser.add_argument(
        "other", nargs="?", default=None, help="If given, the canonical hashes of both reports are compared."
    )
    report_parser.set_defaults(func=report_command)

    return parser


def _create_configuration_parser(
    parent_parser: Optional[argparse.ArgumentParser] = None,
) -> argparse.ArgumentParser:
    """Create the configuration parser.

    If parent_parser is present, the configuration parser is added in
    the subparsers of the parent parser. If not, another parser
    is created. parent_parser not present should only be used for
    documentation.

    Commands:
        create

    Args:
        parent_parser (argparse.ArgumentParser, optional): parent parser to use. Defaults to None.

    Returns:
        argparse.ArgumentParser: configuration parser.
    """
    if parent_parser:
        # pylint: disable=protected-access
        assert parent_parser._subparsers
        subparsers = parent_parser._subparsers._group_actions[0]
        assert isinstance(subparsers, argparse._SubParsersAction)
        configuration_parser = subparsers.add_parser(
            "configuration", help="Configuration commands"
        )
        configuration_subparsers = configuration_parser.add_subparsers()
    else:
        parser = argparse.ArgumentParser(prog="kneser-tw configuration")
        configuration_subparsers = parser.add_subparsers()

    configuration_create_parser = configuration_subparsers.add_parser(
        "create", help="Create a configuration file"
    )
    configuration_create_parser.set_defaults(func=configuration_create)
    configuration_create_parser.add_argument(
        "-f",
        "--file",
        default="config.toml",
        help="Path of the file to create. Default : config.toml.",
    )
    configuration_create_parser.add_argument(
        "--override",
        action="store_true",
        help="If present, this will override the current configuration file at the given path, if it exists.",
    )

    if parent_parser:
        return parent_parser
    return parser


def main(argv: Optional[List[str]] = None) -> int:
    """
    This is the actual entrypoint.

    It constructs the parser, loads the configuration, runs the command
    and maps the errors to exit codes.

    Args:
        argv (List[str], optional): the arguments. Defaults to sys.argv[1:].

    Returns:
        int: the exit code.
    """
    argv = list(sys.argv[1:] if argv is None else argv)
    parser = _create_main_parser()
    _create_configuration_parser(parser)

    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        # argparse exits with 2 on usage errors, 0 for --help and --version
        return int(exc.code or 0)
    args.argv = argv

    try:
        args.configuration = Configuration(args.config)
    except InvalidConfiguration as exc:
        create_loggers(args.verbose, None)
        print(f"[ERROR] {exc}", file=sys.stderr)
        return ExitCode.USAGE_ERROR
    create_loggers(args.verbose, args.configuration)

    if not hasattr(args, "func"):
        print(MOTD)
        print("No command specified. Run with -h|--help to see the possible commands.")
        return ExitCode.USAGE_ERROR

    try:
        return int(args.func(args))
    except ThresholdNotFound as exc:
        print(f"[FAIL] {exc}", file=sys.stderr)
        return ExitCode.CHECK_FAILED
    except CapExceeded as exc:
        print(f"[ERROR] {exc}. Raise the cap in the configuration file.", file=sys.stderr)
        return ExitCode.USAGE_ERROR
    except (KneserTWError, InvalidConfiguration, ValueError, OSError) as exc:
        print(f"[ERROR] {exc}", file=sys.stderr)
        return ExitCode.USAGE_ERROR


def _start_report(args: argparse.Namespace, params: Dict[str, Any]) -> RunReport:
    return RunReport(args.argv, params)


def _finish(args: argparse.Namespace, report: RunReport, start: float, code: ExitCode) -> ExitCode:
    report.timings["total"] = time.perf_counter() - start
    if args.report and not report.save(args.report):
        print(f"[ERROR] The report could not be written to {args.report}.", file=sys.stderr)
        return ExitCode.USAGE_ERROR
    return code


def _default_path(params: KneserParams, suffix: str) -> Path:
    return Path(f"kneser_{params.n}_{params.k}_{params.t}{suffix}")


def info(args: argparse.Namespace) -> ExitCode:
    """Print information on the current installation of kneser-tw.

    Args:
        args (argparse.Namespace): the args passed to the command line.

    Returns:
        ExitCode: always SUCCESS.
    """
    print(get_script_infos(args.configuration))
    return ExitCode.SUCCESS


def configuration_create(args: argparse.Namespace) -> ExitCode:
    """Create a configuration file from the bundled example.

    Args:
        args (argparse.Namespace): the args passed to the command line.

    Returns:
        ExitCode: SUCCESS, or USAGE_ERROR if the file could not be created.
    """
    if create_configuration_file_command(args):
        return ExitCode.SUCCESS
    return ExitCode.USAGE_ERROR


def graph_command(args: argparse.Namespace) -> ExitCode:
    """Write K(n, k, t) as a .gr file, vertices being colex ranks plus one.

    Args:
        args (argparse.Namespace): the args passed to the command line.

    Returns:
        ExitCode: SUCCESS.
    """
    start = time.perf_counter()
    configuration: Configuration = args.configuration
    params = KneserParams(args.n, args.k, args.t)
    graph = build_graph(params, max_vertices=configuration.graph.max_vertices)
    graph.require_materialized()

    out = Path(args.out) if args.out else _default_path(params, ".gr")
    write_gr(graph, out, comments=[f"{params}"])
    if args.labels:
        write_labels(graph, args.labels)
    print(f"{params}: {graph.number_of_nodes()} vertices, {graph.number_of_edges()} edges -> {out}")

    report = _start_report(
        args,
        {
            **params.as_dict(),
            "out": str(out),
            "labels": args.labels,
            "max_vertices": configuration.graph.max_vertices,
        },
    )
    report.solver = {
        "vertices": graph.number_of_nodes(),
        "edges": graph.number_of_edges(),
        "max_degree": max_degree_formula(params),
    }
    return _finish(args, report, start, ExitCode.SUCCESS)


def solve_command(args: argparse.Namespace) -> ExitCode:
    """Compute the treewidth of a .gr file and write the certificate.

    Args:
        args (argparse.Namespace): the args passed to the command line.

    Returns:
        ExitCode: SUCCESS if the treewidth is exact, RESOURCE_LIMIT if only bounds were found.
    """
    start = time.perf_counter()
    configuration: Configuration = args.configuration
    graph = read_gr(args.gr)

    limits = configuration.solver.limits(SolveMethod(args.method) if args.method else None)
    overrides: Dict[str, Any] = {}
    if args.time_limit is not None:
        overrides["time_limit"] = args.time_limit
    if args.heuristic is not None:
        overrides["heuristic"] = Heuristic(args.heuristic)
    limits = dataclasses.replace(limits, **overrides)

    result = exact_treewidth(graph, limits)
    td_path = Path(args.td) if args.td else Path(args.gr).with_suffix(".td")
    write_td(result.certificate, graph.number_of_nodes(), td_path)
    print(str(result))

    report = _start_report(
        args,
        {
            "gr": str(args.gr),
            "td": str(td_path),
            "method": limits.method,
            "dp_max_vertices": limits.dp_max_vertices,
            "bnb_max_vertices": limits.bnb_max_vertices,
            "time_limit": str(limits.time_limit),
            "heuristic": limits.heuristic,
        },
    )
    report.solver = result.as_dict()
    report.timings["solver"] = result.stats.elapsed
    if not result.exact:
        logger.warning("Treewidth not decided: %s", str(result))
        return _finish(args, report, start, ExitCode.RESOURCE_LIMIT)
    return _finish(args, report, start, ExitCode.SUCCESS)


def validate_command(args: argparse.Namespace) -> ExitCode:
    """Validate a .td file against a .gr file.

    Args:
        args (argparse.Namespace): the args passed to the command line.

    Returns:
        ExitCode: SUCCESS if the decomposition is valid, CHECK_FAILED otherwise.
    """
    start = time.perf_counter()
    graph = read_gr(args.gr)
    pace = read_td(args.td)
    if pace.num_vertices != graph.number_of_nodes():
        logger.warning(
            "The .td file is for %i vertices, the graph has %i.",
            pace.num_vertices,
            graph.number_of_nodes(),
        )
    width_report = validate_decomposition(graph, pace.decomposition)
    if width_report.valid:
        print(f"width {width_report.width}")
    else:
        for violation in width_report.violations:
            print(f"[FAIL] {violation}")

    report = _start_report(args, {"gr": str(args.gr), "td": str(args.td)})
    report.solver = width_report.as_dict()
    code = ExitCode.SUCCESS if width_report.valid else ExitCode.CHECK_FAILED
    return _finish(args, report, start, code)


def alpha_command(args: argparse.Namespace) -> ExitCode:
    """Compute the independence number of K(n, k, t) by brute force.

    Args:
        args (argparse.Namespace): the args passed to the command line.

    Returns:
        ExitCode: SUCCESS.
    """
    start = time.perf_counter()
    configuration: Configuration = args.configuration
    params = KneserParams(args.n, args.k, args.t)
    graph = build_graph(params, max_vertices=configuration.graph.max_vertices)
    graph.require_materialized()
    result = brute_force_alpha(graph, max_vertices=configuration.alpha.max_vertices)

    print(f"alpha {result.size}")
    print("witness " + " ".join(str(graph.vertex_subset(v)) for v in sorted(result.witness)))
    print(f"pencil size {params.pencil_size}")

    report = _start_report(
        args,
        {
            **params.as_dict(),
            "max_vertices": configuration.alpha.max_vertices,
        },
    )
    report.solver = {
        "alpha": result.size,
        "witness": sorted(result.witness),
        "nodes": result.nodes,
        "pencil_size": params.pencil_size,
        "in_wilson_range": params.in_wilson_range,
        "crowded_set_size": crowded_set_size(params) if params.t + 2 <= params.n else None,
    }
    return _finish(args, report, start, ExitCode.SUCCESS)


def decompose_command(args: argparse.Namespace) -> ExitCode:
    """Write the star decomposition of K(n, k, t) around a pencil or a maximum independent set.

    Args:
        args (argparse.Namespace): the args passed to the command line.

    Returns:
        ExitCode: SUCCESS if the decomposition validates, CHECK_FAILED otherwise.
    """
    start = time.perf_counter()
    configuration: Configuration = args.configuration
    params = KneserParams(args.n, args.k, args.t)
    graph = build_graph(params, max_vertices=configuration.graph.max_vertices)
    graph.require_materialized()

    if args.maximum:
        indep = brute_force_alpha(graph, max_vertices=configuration.alpha.max_vertices).witness
        base: Optional[List[int]] = None
    else:
        if args.base:
            base = [int(item) for item in args.base.split(",")]
        else:
            base = list(range(1, params.t + 1))
        indep = pencil_independent_set(params, base)

    td = star_decomposition(graph, indep)
    width_report = validate_decomposition(graph, td)
    td_path = Path(args.td) if args.td else _default_path(params, ".td")
    write_td(td, graph.number_of_nodes(), td_path, comments=[f"{params}"])
    print(f"width {td.width} (independent set of size {len(indep)}) -> {td_path}")
    print(f"C(n,k) - C(n-t,k-t) - 1 = {upper_bound_formula(params)}")
    for violation in width_report.violations:
        print(f"[FAIL] {violation}")

    report = _start_report(
        args,
        {
            **params.as_dict(),
            "base": base,
            "maximum": args.maximum,
            "td": str(td_path),
        },
    )
    report.solver = {
        "independent_set_size": len(indep),
        "max_degree": max_degree_formula(params),
        "upper_bound_formula": upper_bound_formula(params),
        **width_report.as_dict(),
    }
    code = ExitCode.SUCCESS if width_report.valid else ExitCode.CHECK_FAILED
    return _finish(args, report, start, code)


def separator_command(args: argparse.Namespace) -> ExitCode:
    """Find a minimum balanced separator of a .gr file.

    Args:
        args (argparse.Namespace): the args passed to the command line.

    Returns:
        ExitCode: SUCCESS.
    """
    start = time.perf_counter()
    configuration: Configuration = args.configuration
    graph = read_gr(args.gr)
    p = parse_rational(args.p) if args.p is not None else configuration.separator.p
    result = min_balanced_separator(graph, p, max_vertices=configuration.separator.max_vertices)
    vertices = " ".join(str(v + 1) for v in result.separator)
    print(f"separator size {result.size}: {vertices}")

    report = _start_report(
        args,
        {"gr": str(args.gr), "p": p, "max_vertices": configuration.separator.max_vertices},
    )
    report.solver = result.as_dict()
    return _finish(args, report, start, ExitCode.SUCCESS)


def probe_command(args: argparse.Namespace) -> ExitCode:
    """Solve K(n, k, t) exactly and compare with the star decomposition bound.

    Args:
        args (argparse.Namespace): the args passed to the command line.

    Returns:
        ExitCode: SUCCESS if the treewidth is exact, RESOURCE_LIMIT otherwise.
    """
    start = time.perf_counter()
    configuration: Configuration = args.configuration
    params = KneserParams(args.n, args.k, args.t)
    limits = configuration.solver.limits()
    probe = probe_upper_bound(params, limits, max_vertices=configuration.graph.max_vertices)
    if args.td:
        write_td(probe.result.certificate, params.num_vertices, args.td, comments=[f"{params}"])
    print(f"{params}: {probe.result}, C(n,k) - C(n-t,k-t) - 1 = {probe.formula}")
    if probe.equal is not None:
        print("equal" if probe.equal else "not equal")

    report = _start_report(
        args,
        {
            **params.as_dict(),
            "dp_max_vertices": limits.dp_max_vertices,
            "bnb_max_vertices": limits.bnb_max_vertices,
            "time_limit": str(limits.time_limit),
            "heuristic": limits.heuristic,
        },
    )
    report.solver = probe.as_dict()
    report.timings["solver"] = probe.result.stats.elapsed
    code = ExitCode.SUCCESS if probe.result.exact else ExitCode.RESOURCE_LIMIT
    return _finish(args, report, start, code)


def verify_command(args: argparse.Namespace) -> ExitCode:
    """Run a verification suite.

    Args:
        args (argparse.Namespace): the args passed to the command line.

    Returns:
        ExitCode: SUCCESS if every check passed, CHECK_FAILED otherwise.
    """
    start = time.perf_counter()
    configuration: Configuration = args.configuration
    suite = Suite(args.suite)
    overrides = {
        name: getattr(args, name)
        for name in ("n", "k", "t", "c")
        if getattr(args, name) is not None
    }
    for name in overrides:
        if name not in SUITE_PARAMETERS[suite]:
            raise ValueError(f"Suite {suite.value} has no parameter {name}.")

    options = configuration.verify.suite_options()
    if args.workers is not None:
        options = dataclasses.replace(options, workers=args.workers)
    result = run_suite(suite, overrides, options)

    for check in result.reports:
        if args.all or not check.passed or check.condition is ConditionId.THRESHOLD:
            print(str(check))
    print(
        f"suite {suite.value}: {len(result.reports)} checks, {len(result.failures)} failed"
    )

    report = _start_report(
        args,
        {
            "suite": suite,
            "ranges": {name: format_range(values) for name, values in result.ranges.items()},
            "ln_eps": options.ln_eps,
            "horizon": options.horizon,
            "enumeration_cap": options.enumeration_cap,
            "workers": options.workers,
        },
    )
    report.checks.extend(result.reports)
    code = ExitCode.SUCCESS if result.passed else ExitCode.CHECK_FAILED
    return _finish(args, report, start, code)


def report_command(args: argparse.Namespace) -> ExitCode:
    """Print the summary of a stored report, optionally comparing it with another.

    Args:
        args (argparse.Namespace): the args passed to the command line.

    Returns:
        ExitCode: SUCCESS, CHECK_FAILED if the reports differ, USAGE_ERROR if a report cannot be read.
    """
    report = RunReport.load(args.path)
    if report is None:
        print(f"[ERROR] Could not read the report {args.path}.", file=sys.stderr)
        return ExitCode.USAGE_ERROR
    print(report.summary())
    if args.other is None:
        return ExitCode.SUCCESS

    other = RunReport.load(args.other)
    if other is None:
        print(f"[ERROR] Could not read the report {args.other}.", file=sys.stderr)
        return ExitCode.USAGE_ERROR
    if report.canonical_hash() == other.canonical_hash():
        print("[OK] The canonical reports are identical.")
        return ExitCode.SUCCESS
    print("[FAIL] The canonical reports differ.")
    return ExitCode.CHECK_FAILED


if __name__ == "__main__":
    sys.exit(main())
