"""
Threshold searches on the LTE-U on/off comparison.

find_threshold bisects the difference of a metric (LTE-U on minus off) in W,
gamma or alpha. The remaining functions cover the closed-form thresholds: the
optimal duty cycle, the consumer-surplus gain region in gamma and the
revenue-gain boundary of licensed sharing.
"""

import logging
import math
from dataclasses import dataclass, field
from enum import Enum
from typing import Iterable, Optional

import numpy as np

from ..equilibrium.outcome import EquilibriumOutcome
from ..errors import InvalidConfig, MarketError, NoSignChange, UnsupportedFunctions
from ..model.config import EntrantRegime, MarketConfig
from ..model.functions import CongestionFn, DemandCurve
from ..numerics import bisect_root, golden_section_max
from ..solver_interface import get_solver
from .welfare import welfare_report

_logger = logging.getLogger(__name__)

THRESHOLD_XTOL = 1e-8
PRESCAN_POINTS = 64
DENSE_ALPHA_STEP = 1e-3


class Metric(Enum):
    INCUMBENT_REVENUE = "incumbent_revenue"
    CONSUMER_SURPLUS = "consumer_surplus"
    SOCIAL_WELFARE = "social_welfare"
    TOTAL_MASS = "total_mass"


class SearchParameter(Enum):
    W = "W"
    GAMMA = "gamma"
    ALPHA = "alpha"


def metric_value(metric: Metric, outcome: EquilibriumOutcome, P: DemandCurve) -> float:
    """Read one metric off an outcome."""
    if metric is Metric.INCUMBENT_REVENUE:
        return outcome.revenue_incumbent
    if metric is Metric.TOTAL_MASS:
        return outcome.total_mass
    report = welfare_report(outcome, P)
    if metric is Metric.CONSUMER_SURPLUS:
        return report.consumer_surplus
    return report.social_welfare


@dataclass(frozen=True)
class ThresholdQuery:
    """Which metric to compare with LTE-U on and off, along which parameter and bracket."""
    metric: Metric
    parameter: SearchParameter
    bracket: tuple[float, float]
    base: MarketConfig
    comparison: str = "lteu_vs_off"

    def __post_init__(self):
        object.__setattr__(self, "metric", Metric(self.metric))
        object.__setattr__(self, "parameter", SearchParameter(self.parameter))
        lo, hi = self.bracket
        if not lo < hi:
            raise InvalidConfig(f"Threshold bracket must satisfy lo < hi, got [{lo}, {hi}].", field="bracket")
        if self.comparison != "lteu_vs_off":
            raise InvalidConfig(f"Unknown comparison '{self.comparison}'; only 'lteu_vs_off' is supported.")

    @property
    def regime(self) -> EntrantRegime:
        return self.base.regime

    def config_at(self, value: float) -> MarketConfig:
        return self.base.replace(**{self.parameter.value: value})


def metric_difference(query: ThresholdQuery, value: float, g: CongestionFn, P: DemandCurve) -> float:
    """Metric with LTE-U minus metric without, at one parameter value."""
    outcomes = get_solver(query.regime).solve_pair(query.config_at(value), g, P)
    return metric_value(query.metric, outcomes[True], P) - metric_value(query.metric, outcomes[False], P)


@dataclass(frozen=True)
class ThresholdResult:
    """Outcome of a threshold search; ``status`` is 'found', 'no_sign_change' or 'error'."""
    status: str
    value: float = math.nan
    diff_lo: float = math.nan
    diff_hi: float = math.nan
    error: str = ""

    @property
    def found(self) -> bool:
        return self.status == "found"

    def require(self) -> float:
        """Return the crossing value or raise the matching error."""
        if self.status == "no_sign_change":
            raise NoSignChange(self.error, self.diff_lo, self.diff_hi)
        if self.status != "found":
            raise MarketError(self.error)
        return self.value


def find_threshold(
    query: ThresholdQuery,
    g: CongestionFn,
    P: DemandCurve,
    xtol: float = THRESHOLD_XTOL,
) -> ThresholdResult:
    """
    Parameter value where the metric with LTE-U crosses the metric without.

    The bracket end points are checked for a sign change before bisecting.

    Returns:
        ThresholdResult with the crossing to absolute tolerance ``xtol``.
    """
    lo, hi = query.bracket
    try:
        diff = lambda v: metric_difference(query, v, g, P)
        diff_lo, diff_hi = diff(lo), diff(hi)
        if diff_lo == 0.0:
            return ThresholdResult("found", lo, diff_lo, diff_hi)
        if diff_hi == 0.0:
            return ThresholdResult("found", hi, diff_lo, diff_hi)
        if np.sign(diff_lo) == np.sign(diff_hi):
            message = (
                f"{query.metric.value} difference keeps its sign on {query.parameter.value} in [{lo:g}, {hi:g}] "
                f"(lo: {diff_lo:.6g}, hi: {diff_hi:.6g}). Widen the bracket."
            )
            _logger.info(message)
            return ThresholdResult("no_sign_change", math.nan, diff_lo, diff_hi, message)
        value = bisect_root(diff, lo, hi, xtol=xtol)
    except MarketError as exc:
        _logger.warning("Threshold search on %s failed: %s", query.parameter.value, exc)
        return ThresholdResult("error", error=f"{type(exc).__name__}: {exc}")

    _logger.debug("Threshold %s on %s found at %.10g", query.metric.value, query.parameter.value, value)
    return ThresholdResult("found", value, diff_lo, diff_hi)


@dataclass(frozen=True)
class AlphaOptimum:
    alpha: float
    revenue: float
    method: str


def _check_licensed_linear(cfg: MarketConfig, g: CongestionFn, P: DemandCurve, what: str) -> None:
    if cfg.regime is not EntrantRegime.ONE_LICENSED:
        raise InvalidConfig(f"{what} needs regime 'one_licensed_sharing', got '{cfg.regime.value}'.", field="regime")
    if not (g.is_linear and P.is_linear):
        raise UnsupportedFunctions(f"{what} is only defined for linear congestion and demand.")


def optimal_alpha(cfg: MarketConfig, g: CongestionFn, P: DemandCurve) -> AlphaOptimum:
    """
    Revenue-maximizing duty cycle of the incumbent under licensed sharing.

    As W -> inf the answer is max(1 - 3*gamma*B/4, 0). For finite W the
    revenue curve is pre-scanned on 64 points; a unimodal scan is refined by
    golden-section search, anything else falls back to a 1e-3 grid.
    """
    _check_licensed_linear(cfg, g, P, "optimal_alpha")
    solver = get_solver(cfg.regime)
    cfg = cfg.with_lteu(True)
    revenue = lambda a: solver.solve(cfg.replace(alpha=float(a)), g, P).revenue_incumbent

    if cfg.w_asymptotic:
        alpha = max(1.0 - 3.0 * cfg.gamma * cfg.B / 4.0, 0.0)
        return AlphaOptimum(alpha, revenue(alpha), "closed_form")

    grid = np.linspace(0.0, 1.0, PRESCAN_POINTS)
    values = np.array([revenue(a) for a in grid])
    steps = np.sign(np.diff(values))
    steps = steps[steps != 0]
    unimodal = not np.any(np.diff(steps) > 0)  # never turns back up
    if unimodal:
        best = int(np.argmax(values))
        lo, hi = grid[max(best - 1, 0)], grid[min(best + 1, len(grid) - 1)]
        alpha, value = golden_section_max(revenue, lo, hi)
        return AlphaOptimum(alpha, value, "golden_section")

    _logger.info("Revenue in alpha is not unimodal for %s; using a dense grid", cfg.describe())
    dense = np.linspace(0.0, 1.0, int(round(1.0 / DENSE_ALPHA_STEP)) + 1)
    dense_values = np.array([revenue(a) for a in dense])
    best = int(np.argmax(dense_values))
    return AlphaOptimum(float(dense[best]), float(dense_values[best]), "dense_grid")


@dataclass(frozen=True)
class CSGainRegion:
    """Where a multi-entrant incumbent with LTE-U can raise consumer surplus through gamma."""
    feasible: bool
    b_bound: float
    gamma_lo: float = math.nan
    gamma_hi: float = math.nan
    K: float = math.nan
    delta: float = math.nan
    reason: str = ""


def cs_gain_region(cfg: MarketConfig) -> CSGainRegion:
    """
    Licensed-bandwidth bound and gamma interval of the consumer-surplus gain region.

    With K = ab/(1 - b(1-a)) and D = 2a^2b^2 - [2(1-K)B + ab]^2 the interval is
    (ab - 2(1-K)B -/+ sqrt(D)) / (4(1-K)), available when B is below the bound
    and D >= 0.
    """
    alpha, beta, B = cfg.alpha, cfg.beta, cfg.B
    if beta >= 1.0:
        return CSGainRegion(False, math.nan, reason=f"beta = {beta} leaves no unlicensed bandwidth to the entrants.")
    utilization = alpha * beta
    b_bound = (math.sqrt(2.0) - 1.0) * (1.0 - beta + utilization) * utilization / (2.0 * (1.0 - beta))
    K = utilization / (1.0 - beta * (1.0 - alpha))
    delta = 2.0 * utilization ** 2 - (2.0 * (1.0 - K) * B + utilization) ** 2

    if B > b_bound:
        return CSGainRegion(False, b_bound, K=K, delta=delta, reason=f"B = {B:g} exceeds the bound {b_bound:.6g}.")
    if delta < 0 or K >= 1.0:
        return CSGainRegion(False, b_bound, K=K, delta=delta, reason=f"Discriminant {delta:.6g} is negative.")

    root = math.sqrt(delta)
    centre = utilization - 2.0 * (1.0 - K) * B
    scale = 4.0 * (1.0 - K)
    return CSGainRegion(True, b_bound, (centre - root) / scale, (centre + root) / scale, K, delta)


@dataclass(frozen=True)
class BoundaryPoint:
    B: float
    result: ThresholdResult


@dataclass(frozen=True)
class RevenueGainBoundary:
    """
    W thresholds below which LTE-U raises licensed-sharing revenue, per B.

    ``asymptotic_b_bound`` = 4(1-alpha)/(3*gamma): below it the gain persists as W -> inf.
    """
    asymptotic_b_bound: float
    points: list[BoundaryPoint] = field(default_factory=list)


def revenue_gain_boundary(
    cfg: MarketConfig,
    b_grid: Iterable[float],
    bracket: tuple[float, float],
    g: Optional[CongestionFn] = None,
    P: Optional[DemandCurve] = None,
) -> RevenueGainBoundary:
    """Trace W_th(B) for licensed sharing over a grid of licensed bandwidths."""
    g = g or CongestionFn.linear()
    P = P or DemandCurve.linear()
    _check_licensed_linear(cfg, g, P, "revenue_gain_boundary")
    if cfg.alpha >= 1.0:
        bound = math.inf
    else:
        bound = 4.0 * (1.0 - cfg.alpha) / (3.0 * cfg.gamma)

    points = []
    for B in b_grid:
        query = ThresholdQuery(Metric.INCUMBENT_REVENUE, SearchParameter.W, bracket, cfg.replace(B=float(B)))
        points.append(BoundaryPoint(float(B), find_threshold(query, g, P)))
    return RevenueGainBoundary(bound, points)


@dataclass(frozen=True)
class SharingComparison:
    licensed: EquilibriumOutcome
    unlicensed: EquilibriumOutcome

    @property
    def incumbent_gain(self) -> float:
        """Incumbent revenue under licensed minus unlicensed sharing."""
        return self.licensed.revenue_incumbent - self.unlicensed.revenue_incumbent

    @property
    def entrant_gain(self) -> float:
        return self.licensed.revenue_entrants_total - self.unlicensed.revenue_entrants_total


def compare_sharing_modes(
    cfg: MarketConfig,
    g: Optional[CongestionFn] = None,
    P: Optional[DemandCurve] = None,
) -> SharingComparison:
    """Licensed versus unlicensed sharing with one entrant and LTE-U off."""
    g = g or CongestionFn.linear()
    P = P or DemandCurve.linear()
    base = cfg.with_lteu(False)
    licensed = get_solver(EntrantRegime.ONE_LICENSED).solve(
        base.replace(regime=EntrantRegime.ONE_LICENSED, n_entrants=1), g, P
    )
    unlicensed = get_solver(EntrantRegime.ONE_UNLICENSED).solve(
        base.replace(regime=EntrantRegime.ONE_UNLICENSED, n_entrants=1), g, P
    )
    return SharingComparison(licensed, unlicensed)
