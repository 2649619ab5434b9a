"""
Multi-entrant competition under homogeneous (step) demand.

All A customers value service at T, so the inverse demand is flat up to A and
the generic fixed-point bisection does not apply. The incumbent's optimum falls
into one of three regions:

1. spare customers remain and the delivered price is T,
2. the market is exactly covered at delivered price T (corner),
3. the market is covered and competition pushes the delivered price below T.
"""

import logging
import math
from dataclasses import dataclass

from ..errors import InvalidConfig, UnsupportedFunctions
from ..model.bands import effective_bands
from ..model.config import MarketConfig
from ..model.functions import DemandCurve
from .outcome import EquilibriumOutcome

_logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class HomogeneousWelfare:
    social_welfare: float
    region: int


def region_two_bound(A: float, T: float, B: float) -> float:
    """Largest W for which region 1 applies: max(A/T - B/2, 0)."""
    return max(A / T - B / 2.0, 0.0)


def region_three_bound(A: float, T: float, B: float) -> float:
    """W beyond which the delivered price drops below T."""
    return (math.sqrt(A * A + B * B * T * T) - B * T + A) / (2.0 * T)


def homogeneous_sw(A: float, T: float, B: float, W: float) -> HomogeneousWelfare:
    """
    Piecewise social welfare of the multi-entrant market under step demand.

    Args:
        A: Market size
        T: Customer valuation
        B: Licensed bandwidth (or the equivalent b_e)
        W: Unlicensed bandwidth (or the equivalent w_e)

    Returns:
        HomogeneousWelfare with the welfare value and the region index 1, 2 or 3.
    """
    if not (A > 0 and T > 0 and B > 0):
        raise InvalidConfig(f"Step-demand welfare needs A, T, B > 0, got A={A}, T={T}, B={B}.")
    if not W >= 0:
        raise InvalidConfig(f"Unlicensed bandwidth must be non-negative, got W={W}.", field="W")

    # region 1 is empty once the licensed optimum B*T/2 exceeds the market
    if B * T <= 2.0 * A and W <= region_two_bound(A, T, B):
        return HomogeneousWelfare(B * T * T / 4.0, 1)
    if W <= region_three_bound(A, T, B):
        x1 = A - W * T
        return HomogeneousWelfare(x1 * (T - x1 / B), 2)
    return HomogeneousWelfare(A * T - A * A * (B + 4.0 * W) / (4.0 * W * (B + W)), 3)


def solve_homogeneous_multi(cfg: MarketConfig, P: DemandCurve) -> EquilibriumOutcome:
    """
    Multi-entrant equilibrium with linear congestion and step demand.

    Entrants price at zero; the incumbent picks its mass x1 and the pool fills
    up to congestion level d (w_t = w_e * d).
    """
    if not P.is_homogeneous:
        raise UnsupportedFunctions(f"solve_homogeneous_multi needs homogeneous demand, got '{P.label}'.")

    A, T = P.market_size, P.valuation
    bands = effective_bands(cfg)
    b, w = bands.b_e, bands.w_e

    if bands.asymptotic:
        return _outcome(cfg, 0.0, 0.0, A, 0.0, "asymptotic")

    if w == 0:
        x1 = min(b * T / 2.0, A)
        p1 = T - x1 / b
        return _outcome(cfg, p1, x1, 0.0, T, "closed_form_region1" if x1 < A else "closed_form_region2")

    if w <= region_two_bound(A, T, b):
        x1 = b * T / 2.0
        return _outcome(cfg, T - x1 / b, x1, w * T, T, "closed_form_region1")
    if w <= region_three_bound(A, T, b):
        x1 = A - w * T
        return _outcome(cfg, T - x1 / b, x1, w * T, T, "closed_form_region2")

    d = A * (b + 2.0 * w) / (2.0 * w * (b + w))
    w_total = w * d
    x1 = A - w_total
    return _outcome(cfg, d - x1 / b, x1, w_total, d, "closed_form_region3")


def _outcome(cfg: MarketConfig, p1: float, x1: float, w_total: float, delivered: float, method: str) -> EquilibriumOutcome:
    _logger.debug("Step-demand multi-entrant %s: p1=%g x1=%g w_t=%g d=%g", method, p1, x1, w_total, delivered)
    return EquilibriumOutcome(
        regime=cfg.regime,
        lteu_enabled=cfg.lteu_enabled,
        p_incumbent=p1,
        x_incumbent=x1,
        p_entrant=0.0,
        w_total=w_total,
        delivered_price=delivered,
        revenue_incumbent=p1 * x1,
        revenue_entrants_total=0.0,
        method=method,
    )
