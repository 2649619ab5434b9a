"""
Wardrop customer split for fixed announced prices.

Services are ordered [incumbent primary service, unlicensed pool]. Customers
pick the service with the lowest delivered price (price plus congestion); at
equilibrium every active service delivers the same price, which equals the
inverse demand at the total served mass.
"""

import logging
import math
from dataclasses import dataclass
from typing import Callable, Sequence

from ..errors import InvalidConfig
from ..model.bands import (
    EffectiveBands,
    effective_bands,
    entrant_congestion,
    entrant_mass_at,
    incumbent_congestion,
    incumbent_mass_at,
)
from ..model.config import MarketConfig
from ..model.functions import CongestionFn, DemandCurve
from ..numerics import bisect_root
from .outcome import EquilibriumOutcome

_logger = logging.getLogger(__name__)

WARDROP_XTOL = 1e-12


@dataclass(frozen=True)
class WardropState:
    """Masses per service together with the total mass and the delivered price."""
    masses: list[float]
    total_mass: float
    delivered_price: float


def _mass_maps(cfg: MarketConfig, g: CongestionFn, bands: EffectiveBands, n: int) -> list[Callable[[float], float]]:
    maps = [lambda level: incumbent_mass_at(level, cfg, g, bands)]
    if n == 2:
        maps.append(lambda level: entrant_mass_at(level, cfg, g, bands))
    return maps


def _supply(maps, prices: Sequence[float], d: float) -> list[float]:
    return [mass_at(d - p) for mass_at, p in zip(maps, prices)]


def _single_service_total(mass_at, price: float, P: DemandCurve) -> float:
    """Total mass when only one service is active: mass_at(P(Q) - price) = Q."""
    excess = lambda q: mass_at(P(q) - price) - q
    if excess(P.q_max) >= 0:
        return P.q_max
    return bisect_root(excess, 0.0, P.q_max, xtol=WARDROP_XTOL)


def wardrop_state(
    prices: Sequence[float],
    cfg: MarketConfig,
    g: CongestionFn,
    P: DemandCurve,
) -> WardropState:
    """
    Solve the Wardrop conditions for one or two services.

    Args:
        prices: Announced prices [incumbent] or [incumbent, pool]
        cfg: Market configuration (its lteu flag selects the congestion maps)
        g: Congestion function
        P: Inverse demand

    Returns:
        WardropState. When every price is at least P(0) nobody buys and all
        masses are zero.
    """
    prices = [float(p) for p in prices]
    if len(prices) not in (1, 2):
        raise InvalidConfig(f"Expected one or two service prices, got {len(prices)}.")
    if any(p < 0 or math.isnan(p) for p in prices):
        raise InvalidConfig(f"Service prices must be non-negative, got {prices}.")

    bands = effective_bands(cfg)
    maps = _mass_maps(cfg, g, bands, len(prices))
    pool_unbounded = len(prices) == 2 and cfg.w_asymptotic

    if P.is_homogeneous:
        return _homogeneous_state(prices, maps, pool_unbounded, P)

    if min(prices) >= P.p0:
        _logger.debug("No demand at prices %s (P(0) = %g)", prices, P.p0)
        return WardropState([0.0] * len(prices), 0.0, P.p0)

    if pool_unbounded and prices[1] < P.p0:
        # congestion-free pool pins the delivered price to its own price
        d = prices[1]
        total = P.inverse(d)
        x1 = maps[0](d - prices[0])
        if x1 <= total:
            return WardropState([x1, total - x1], total, d)
        total = _single_service_total(maps[0], prices[0], P)
        return WardropState([total, 0.0], total, P(total))

    excess = lambda q: sum(_supply(maps, prices, P(q))) - q
    if excess(0.0) <= 0:
        return WardropState([0.0] * len(prices), 0.0, P.p0)
    if excess(P.q_max) >= 0:
        total = P.q_max
    else:
        total = bisect_root(excess, 0.0, P.q_max, xtol=WARDROP_XTOL)
    d = P(total)
    return WardropState(_supply(maps, prices, d), total, d)


def _homogeneous_state(prices: list[float], maps, pool_unbounded: bool, P: DemandCurve) -> WardropState:
    """Step demand: delivered price T with spare customers, otherwise the whole market A is served."""
    valuation, market = P.valuation, P.market_size
    n = len(prices)
    if min(prices) >= valuation:
        return WardropState([0.0] * n, 0.0, valuation)

    if pool_unbounded and prices[1] < valuation:
        d = prices[1]
        x1 = maps[0](d - prices[0])
        if x1 <= market:
            return WardropState([x1, market - x1], market, d)
        d = bisect_root(lambda level: maps[0](level - prices[0]) - market, prices[0], d, xtol=WARDROP_XTOL)
        return WardropState([market, 0.0], market, d)

    at_valuation = _supply(maps, prices, valuation)
    if sum(at_valuation) <= market:
        return WardropState(at_valuation, sum(at_valuation), valuation)

    d = bisect_root(
        lambda level: sum(_supply(maps, prices, level)) - market,
        min(prices),
        valuation,
        xtol=WARDROP_XTOL,
    )
    masses = _supply(maps, prices, d)
    return WardropState(masses, sum(masses), d)


def wardrop_split(
    prices: Sequence[float],
    cfg: MarketConfig,
    g: CongestionFn,
    P: DemandCurve,
) -> list[float]:
    """Masses per service at the Wardrop equilibrium for the given prices."""
    return wardrop_state(prices, cfg, g, P).masses


def wardrop_violation(outcome: EquilibriumOutcome, cfg: MarketConfig, g: CongestionFn, P: DemandCurve) -> float:
    """
    Largest violation of the Wardrop conditions by an outcome.

    Active services must deliver exactly the delivered price; inactive ones may
    not be cheaper. The delivered price must match P(Q) (for step demand: T
    while customers are left unserved, at most T otherwise).
    """
    cfg = cfg.with_lteu(outcome.lteu_enabled)
    d = outcome.delivered_price
    services = [(outcome.p_incumbent, outcome.x_incumbent, lambda x: incumbent_congestion(x, cfg, g))]
    if cfg.W > 0:
        services.append((outcome.p_entrant, outcome.w_total, lambda w: entrant_congestion(w, cfg, g)))
    worst = 0.0
    for price, mass, congestion in services:
        if mass > 1e-12:
            worst = max(worst, abs(price + congestion(mass) - d))
        else:
            worst = max(worst, d - price)
    total = outcome.total_mass
    if P.is_homogeneous:
        if total < P.market_size - 1e-9:
            worst = max(worst, abs(d - P.valuation))
        else:
            worst = max(worst, d - P.valuation)
    elif total > 0:
        worst = max(worst, abs(d - P(total)))
    return worst
