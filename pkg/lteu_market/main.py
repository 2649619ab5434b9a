"""
LTE-U Market Equilibrium Tool

Command-line entry point.

Usage:
    python -m lteu_market.main solve <scenario.toml>
    python -m lteu_market.main sweep <scenario.toml> [--out PATH] [--threads N]
    python -m lteu_market.main threshold <scenario.toml>
    python -m lteu_market.main figure <preset> [--out PATH] [--threads N]
    python -m lteu_market.main verify <scenario.toml> [--grid N] [--eps E]

Exit status: 0 success, 1 Nash check failed, 2 scenario or argument error,
3 solver error, 4 no sign change in a threshold bracket.
"""

import argparse
import logging
import sys
from pathlib import Path
from typing import Optional, Sequence

from .analysis.figures import is_region_preset, preset_names, run_figure, run_region
from .analysis.sweeps import fixed_k_sweep, sweep
from .analysis.thresholds import find_threshold
from .analysis.welfare import welfare_report
from .equilibrium.nash import verify_nash
from .errors import InvalidConfig, MarketError, NoSignChange, ScenarioParseError
from .model.bands import effective_bands
from .output import (
    format_nash,
    format_solve_summary,
    format_threshold,
    stem_path,
    write_boundary_csv,
    write_sweep_csv,
)
from .scenario import Scenario
from .solver_interface import get_solver

EXIT_OK = 0
EXIT_VERIFY_FAILED = 1
EXIT_PARSE_ERROR = 2
EXIT_SOLVER_ERROR = 3
EXIT_NO_SIGN_CHANGE = 4

_DEFAULT_LOG_DIR = Path(__file__).resolve().parent.parent / "logs"
_logger = logging.getLogger(__name__)


def configure_logging(log_dir: Optional[Path] = None) -> Path:
    """Send DEBUG and above to logs/lteu_market.log and return the log file path."""
    log_dir = Path(log_dir) if log_dir is not None else _DEFAULT_LOG_DIR
    log_dir.mkdir(parents=True, exist_ok=True)
    log_file = log_dir / "lteu_market.log"
    logging.basicConfig(
        filename=str(log_file),
        level=logging.DEBUG,
        format="%(asctime)s [%(levelname)s] %(message)s",
        force=True,
    )
    return log_file


def _load(path: Path):
    scenario = Scenario.load_from_file(path)
    cfg = scenario.market_config()
    g, P = scenario.build_functions()
    return scenario, cfg, g, P


def cmd_solve(args: argparse.Namespace) -> int:
    scenario, cfg, g, P = _load(args.scenario)
    outcomes = get_solver(cfg.regime).solve_pair(cfg, g, P)
    bands = effective_bands(cfg.with_lteu(True))
    results = {flag: (outcome, welfare_report(outcome, P)) for flag, outcome in outcomes.items()}
    sys.stdout.write(format_solve_summary(cfg, bands, results))
    return EXIT_OK


def cmd_sweep(args: argparse.Namespace) -> int:
    scenario, cfg, g, P = _load(args.scenario)
    grid = scenario.sweep_grid()
    threads = args.threads if args.threads is not None else scenario.run.threads
    try:
        if scenario.run.utilization is not None:
            result = fixed_k_sweep(cfg, scenario.run.utilization, grid, g, P, threads=threads)
        else:
            result = sweep(cfg, scenario.sweep_parameter(), grid, g, P, threads=threads)
    except InvalidConfig as exc:
        raise scenario.error(str(exc), exc.field or "grid", "run") from None

    out = args.out if args.out is not None else scenario.run.output
    write_sweep_csv(result, Path(out) if out else sys.stdout)
    return EXIT_OK


def cmd_threshold(args: argparse.Namespace) -> int:
    scenario, cfg, g, P = _load(args.scenario)
    query = scenario.threshold_query(cfg)
    result = find_threshold(query, g, P)
    sys.stdout.write(format_threshold(query, result))
    result.require()
    return EXIT_OK


def cmd_figure(args: argparse.Namespace) -> int:
    if is_region_preset(args.name):
        write_boundary_csv(run_region(args.name), args.out if args.out is not None else sys.stdout)
        return EXIT_OK
    curves = run_figure(args.name, threads=args.threads or 1)
    if len(curves) == 1:
        _, result = curves[0]
        write_sweep_csv(result, args.out if args.out is not None else sys.stdout)
        return EXIT_OK
    for label, result in curves:
        path = stem_path(args.out, args.name, label)
        write_sweep_csv(result, path)
        sys.stdout.write(f"{path}\n")
    return EXIT_OK


def cmd_verify(args: argparse.Namespace) -> int:
    scenario, cfg, g, P = _load(args.scenario)
    outcome = get_solver(cfg.regime).solve(cfg, g, P)
    grid_size = args.grid if args.grid is not None else scenario.run.grid_size
    eps = args.eps if args.eps is not None else scenario.run.eps
    report = verify_nash(outcome, cfg, g, P, grid_size=grid_size, eps=eps)
    sys.stdout.write(format_nash(report))
    return EXIT_OK if report.passed else EXIT_VERIFY_FAILED


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="lteu_market",
        description="Equilibria, welfare and thresholds of incumbent/entrant competition with LTE-U.",
    )
    parser.add_argument(
        "--log-dir",
        type=Path,
        default=None,
        help="Directory for lteu_market.log (default: logs/ next to the package).",
    )
    commands = parser.add_subparsers(dest="command", required=True)

    solve_cmd = commands.add_parser("solve", help="Solve a scenario with LTE-U off and on.")
    solve_cmd.add_argument("scenario", type=Path)
    solve_cmd.set_defaults(handler=cmd_solve)

    sweep_cmd = commands.add_parser("sweep", help="Sweep one parameter and write CSV.")
    sweep_cmd.add_argument("scenario", type=Path)
    sweep_cmd.add_argument("--out", type=Path, default=None, help="CSV path (default: [run] output or stdout).")
    sweep_cmd.add_argument("--threads", type=int, default=None, help="Worker threads for the sweep rows.")
    sweep_cmd.set_defaults(handler=cmd_sweep)

    threshold_cmd = commands.add_parser("threshold", help="Find where LTE-U on and off cross for a metric.")
    threshold_cmd.add_argument("scenario", type=Path)
    threshold_cmd.set_defaults(handler=cmd_threshold)

    figure_cmd = commands.add_parser("figure", help="Write the CSV behind a figure preset.")
    figure_cmd.add_argument("name", choices=preset_names())
    figure_cmd.add_argument(
        "--out", type=Path, default=None,
        help="CSV path; presets with several curves write <stem>_<label>.csv next to it.",
    )
    figure_cmd.add_argument("--threads", type=int, default=None, help="Worker threads for the sweep rows.")
    figure_cmd.set_defaults(handler=cmd_figure)

    verify_cmd = commands.add_parser("verify", help="Check a solved scenario for profitable price deviations.")
    verify_cmd.add_argument("scenario", type=Path)
    verify_cmd.add_argument("--grid", type=int, default=None, help="Candidate prices per provider (>= 100).")
    verify_cmd.add_argument("--eps", type=float, default=None, help="Largest accepted revenue gain.")
    verify_cmd.set_defaults(handler=cmd_verify)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_PARSE_ERROR if exc.code else EXIT_OK

    configure_logging(args.log_dir)
    target = getattr(args, "scenario", None) or getattr(args, "name", "")
    _logger.info("Command %s %s", args.command, target)

    try:
        status = args.handler(args)
    except ScenarioParseError as exc:
        sys.stderr.write(f"error: {exc}\n")
        status = EXIT_PARSE_ERROR
    except NoSignChange as exc:
        sys.stderr.write(f"error: NoSignChange: {exc}\n  diff_lo={exc.diff_lo:.6g} diff_hi={exc.diff_hi:.6g}\n")
        status = EXIT_NO_SIGN_CHANGE
    except MarketError as exc:
        _logger.exception("Command %s failed", args.command)
        sys.stderr.write(f"error: {type(exc).__name__}: {exc}\n")
        status = EXIT_SOLVER_ERROR

    _logger.info("Command %s finished with exit status %d", args.command, status)
    return status


if __name__ == "__main__":
    sys.exit(main())
