"""
Brute-force Nash check: can any provider gain by announcing another price?

Each provider's price is scanned over [0, P(0)] with the other prices held
fixed; customers re-split by the Wardrop conditions for every candidate.
"""

import logging
from dataclasses import dataclass, field

import numpy as np

from ..errors import MarketError
from ..model.config import EntrantRegime, MarketConfig
from ..model.functions import CongestionFn, DemandCurve
from .outcome import EquilibriumOutcome
from .wardrop import wardrop_split

_logger = logging.getLogger(__name__)

MIN_GRID_SIZE = 100


@dataclass(frozen=True)
class Deviation:
    """Best unilateral price change found for one provider (or one of its services)."""
    provider: str
    baseline_revenue: float
    best_revenue: float
    best_price: float

    @property
    def improvement(self) -> float:
        return self.best_revenue - self.baseline_revenue


@dataclass
class NashReport:
    passed: bool
    eps: float
    grid_size: int
    deviations: list[Deviation] = field(default_factory=list)
    error: str = ""

    @property
    def max_improvement(self) -> float:
        if not self.deviations:
            return float("nan")
        return max(d.improvement for d in self.deviations)

    def deviation(self, provider: str) -> Deviation:
        for dev in self.deviations:
            if dev.provider == provider:
                return dev
        raise KeyError(provider)


def verify_nash(
    outcome: EquilibriumOutcome,
    cfg: MarketConfig,
    g: CongestionFn,
    P: DemandCurve,
    grid_size: int = 2000,
    eps: float = 1e-4,
) -> NashReport:
    """
    Scan unilateral price deviations of every provider.

    Args:
        outcome: Equilibrium to check (its announced prices are used as given)
        cfg: Market configuration the outcome was solved for
        g: Congestion function
        P: Inverse demand
        grid_size: Number of candidate prices on [0, P(0)], at least 100
        eps: Largest revenue gain still accepted as equilibrium

    Returns:
        NashReport; ``passed`` is True iff no provider gains more than eps.
        Errors are reported in the ``error`` field, never raised.
    """
    if grid_size < MIN_GRID_SIZE:
        return NashReport(False, eps, grid_size, error=f"Grid size must be at least {MIN_GRID_SIZE}, got {grid_size}.")

    cfg = cfg.with_lteu(outcome.lteu_enabled)
    grid = np.linspace(0.0, P.p0, grid_size)
    try:
        if outcome.regime is EntrantRegime.NONE:
            deviations = _monopoly_deviations(outcome, cfg, g, P, grid)
        elif outcome.regime is EntrantRegime.ONE_LICENSED:
            deviations = _duopoly_deviations(outcome, cfg, g, P, grid)
        else:
            deviations = _zero_price_deviations(outcome, cfg, g, P, grid)
    except MarketError as exc:
        _logger.warning("Nash verification failed to evaluate: %s", exc)
        return NashReport(False, eps, grid_size, error=str(exc))

    passed = all(dev.improvement <= eps for dev in deviations)
    _logger.debug(
        "Nash check %s: %s", outcome.regime.value,
        ", ".join(f"{d.provider}={d.improvement:.3g}" for d in deviations),
    )
    return NashReport(passed, eps, grid_size, deviations)


def _service_revenues(prices: list[float], cfg: MarketConfig, g: CongestionFn, P: DemandCurve) -> list[float]:
    masses = wardrop_split(prices, cfg, g, P)
    return [p * m for p, m in zip(prices, masses)]


def _scan(provider: str, baseline: float, grid: np.ndarray, revenue_at) -> Deviation:
    revenues = np.array([revenue_at(p) for p in grid])
    best = int(np.argmax(revenues))
    return Deviation(provider, baseline, float(revenues[best]), float(grid[best]))


def _monopoly_deviations(outcome, cfg, g, P, grid) -> list[Deviation]:
    p_l, p_u = outcome.prices
    baseline = sum(_service_revenues([p_l, p_u], cfg, g, P))
    total = lambda prices: sum(_service_revenues(prices, cfg, g, P))
    return [
        _scan("incumbent_licensed", baseline, grid, lambda p: total([p, p_u])),
        _scan("incumbent_unlicensed", baseline, grid, lambda p: total([p_l, p])),
        _scan("incumbent_common", baseline, grid, lambda p: total([p, p])),
    ]


def _duopoly_deviations(outcome, cfg, g, P, grid) -> list[Deviation]:
    p1, p2 = outcome.prices
    base_inc, base_ent = _service_revenues([p1, p2], cfg, g, P)
    return [
        _scan("incumbent", base_inc, grid, lambda p: _service_revenues([p, p2], cfg, g, P)[0]),
        _scan("entrant", base_ent, grid, lambda p: _service_revenues([p1, p], cfg, g, P)[1]),
    ]


def _zero_price_deviations(outcome, cfg, g, P, grid) -> list[Deviation]:
    p1, p_pool = outcome.prices
    base_inc, base_pool = _service_revenues([p1, p_pool], cfg, g, P)
    # unlicensed sharing: the incumbent's own unlicensed service is the rival
    rivals = cfg.n_entrants if outcome.regime is EntrantRegime.MULTI else 2

    def entrant_revenue(p: float) -> float:
        if p > p_pool:
            return 0.0  # rivals keep the whole pool
        pool_revenue = _service_revenues([p1, p], cfg, g, P)[1]
        return pool_revenue if p < p_pool else pool_revenue / rivals

    return [
        _scan("incumbent", base_inc, grid, lambda p: _service_revenues([p, p_pool], cfg, g, P)[0]),
        _scan("entrant", base_pool / rivals, grid, entrant_revenue),
    ]
