"""
Parameter sweeps: one equilibrium solve per grid value and lteu flag.

Rows are independent, so they may run on a thread pool; results are always
assembled in grid order.
"""

import logging
import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from enum import Enum
from typing import Callable, Optional, Sequence

import numpy as np

from ..equilibrium.outcome import EquilibriumOutcome
from ..errors import InvalidConfig, MarketError
from ..model.config import EntrantRegime, MarketConfig
from ..model.functions import CongestionFn, DemandCurve
from ..solver_interface import get_solver
from .welfare import WelfareReport, welfare_report

_logger = logging.getLogger(__name__)


class SweepParameter(Enum):
    W = "W"
    ALPHA = "alpha"
    BETA = "beta"
    GAMMA = "gamma"
    B = "B"


@dataclass(frozen=True)
class SweepRow:
    """One grid value with one lteu flag; ``error`` is set instead of raising."""
    value: float
    lteu: bool
    outcome: Optional[EquilibriumOutcome] = None
    welfare: Optional[WelfareReport] = None
    error: str = ""

    @property
    def ok(self) -> bool:
        return not self.error


@dataclass
class SweepResult:
    parameter: str
    values: list[float] = field(default_factory=list)
    rows: list[SweepRow] = field(default_factory=list)

    def curve(self, lteu: bool) -> list[SweepRow]:
        """Rows of one lteu flag in grid order."""
        return [row for row in self.rows if row.lteu == lteu]

    def column(self, lteu: bool, getter: Callable[[SweepRow], float]) -> np.ndarray:
        """Values extracted from one curve; failed rows give nan."""
        return np.array([getter(row) if row.ok else math.nan for row in self.curve(lteu)])


def _check_grid(grid: Sequence[float]) -> list[float]:
    values = [float(v) for v in grid]
    if any(b <= a for a, b in zip(values, values[1:])):
        raise InvalidConfig("Sweep grid must be strictly increasing.", field="grid")
    return values


def _solve_rows(
    value: float,
    cfg: Optional[MarketConfig],
    g: CongestionFn,
    P: DemandCurve,
    setup_error: str = "",
) -> list[SweepRow]:
    rows = []
    for flag in (False, True):
        if setup_error:
            rows.append(SweepRow(value, flag, error=setup_error))
            continue
        try:
            outcome = get_solver(cfg.regime).solve(cfg.with_lteu(flag), g, P)
            rows.append(SweepRow(value, flag, outcome, welfare_report(outcome, P)))
        except MarketError as exc:
            _logger.warning("Sweep point %g (lteu=%s) failed: %s", value, flag, exc)
            rows.append(SweepRow(value, flag, error=f"{type(exc).__name__}: {exc}"))
    return rows


def _run(
    parameter: str,
    values: list[float],
    make_config: Callable[[float], MarketConfig],
    g: CongestionFn,
    P: DemandCurve,
    threads: int,
) -> SweepResult:
    def task(value: float) -> list[SweepRow]:
        try:
            cfg = make_config(value)
        except MarketError as exc:
            _logger.warning("Sweep point %g has an invalid configuration: %s", value, exc)
            return _solve_rows(value, None, g, P, setup_error=f"{type(exc).__name__}: {exc}")
        return _solve_rows(value, cfg, g, P)

    if threads > 1 and len(values) > 1:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            chunks = list(pool.map(task, values))
    else:
        chunks = [task(v) for v in values]

    result = SweepResult(parameter, values)
    for chunk in chunks:
        result.rows.extend(chunk)
    _logger.debug("Sweep over %s: %d values, %d failed rows", parameter, len(values),
                  sum(not row.ok for row in result.rows))
    return result


def sweep(
    cfg: MarketConfig,
    parameter: SweepParameter | str,
    grid: Sequence[float],
    g: CongestionFn,
    P: DemandCurve,
    threads: int = 1,
) -> SweepResult:
    """
    Solve the base configuration at every grid value of one parameter, LTE-U off and on.

    ``W = inf`` on the grid selects the asymptotic limit.

    Raises:
        InvalidConfig: If the grid is not strictly increasing or the parameter is unknown.
    """
    parameter = SweepParameter(parameter)
    values = _check_grid(grid)
    name = parameter.value
    return _run(name, values, lambda v: cfg.replace(**{name: v}), g, P, threads)


def fixed_k_sweep(
    cfg: MarketConfig,
    k: float,
    alpha_grid: Sequence[float],
    g: CongestionFn,
    P: DemandCurve,
    threads: int = 1,
) -> SweepResult:
    """
    Sweep alpha at fixed utilization k = alpha*beta (beta = k/alpha), multi-entrant market.

    Raises:
        InvalidConfig: If k is outside (0, 1), the regime is not multi, or a grid alpha is not in (k, 1].
    """
    if not 0.0 < k < 1.0:
        raise InvalidConfig(f"Utilization k must lie in (0, 1), got {k}.", field="utilization")
    if cfg.regime is not EntrantRegime.MULTI:
        raise InvalidConfig(f"Fixed-utilization sweeps need regime 'multi', got '{cfg.regime.value}'.", field="regime")
    values = _check_grid(alpha_grid)
    for alpha in values:
        if not k < alpha <= 1.0:
            raise InvalidConfig(
                f"Every alpha must lie in (k, 1] = ({k:g}, 1] so that beta = k/alpha < 1, got {alpha}.",
                field="grid",
            )
    return _run("alpha", values, lambda a: cfg.replace(alpha=a, beta=k / a), g, P, threads)
