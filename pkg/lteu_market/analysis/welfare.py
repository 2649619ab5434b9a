"""
Consumer surplus, social welfare and the small-W welfare slopes.
"""

import logging
from dataclasses import dataclass
from typing import Iterable, NamedTuple

from scipy import integrate

from ..equilibrium.one_entrant import licensed_sharing_asymptotic
from ..equilibrium.outcome import EquilibriumOutcome
from ..errors import InvalidConfig
from ..model.bands import DENOMINATOR_TOL
from ..model.config import MarketConfig
from ..model.functions import CongestionFn, DemandCurve, DemandKind
from ..numerics import bisect_root, golden_section_max, invert_increasing

_logger = logging.getLogger(__name__)

QUAD_TOL = 1e-10


@dataclass(frozen=True)
class WelfareReport:
    consumer_surplus: float
    producer_revenue_total: float
    social_welfare: float
    total_mass: float


def consumer_surplus(outcome: EquilibriumOutcome, P: DemandCurve) -> float:
    """
    Integral of willingness to pay above the delivered price over served customers.

    Closed forms for linear and step demand; adaptive quadrature otherwise.
    """
    total = outcome.total_mass
    if total <= 0:
        return 0.0
    if P.kind is DemandKind.LINEAR:
        return total * total / 2.0
    if P.kind is DemandKind.HOMOGENEOUS:
        return min(total, P.market_size) * max(P.valuation - outcome.delivered_price, 0.0)
    area, _ = integrate.quad(P, 0.0, total, epsabs=QUAD_TOL)
    return max(area - total * P(total), 0.0)


def welfare_report(outcome: EquilibriumOutcome, P: DemandCurve) -> WelfareReport:
    """Consumer surplus, total provider revenue and their sum."""
    surplus = consumer_surplus(outcome, P)
    revenue = outcome.revenue_incumbent + outcome.revenue_entrants_total
    return WelfareReport(surplus, revenue, surplus + revenue, outcome.total_mass)


class SmallWSlopes(NamedTuple):
    without_lteu: float
    with_lteu: float


def _pool_congestion_inverse(cfg: MarketConfig, g: CongestionFn, lteu: bool):
    """Inverse of the unlicensed congestion per unit W: g, or h(t) = (1-a)g(t) + a g(t/(1-b)) with LTE-U."""
    if not (lteu and cfg.alpha > 0 and cfg.beta > 0):
        return g.inverse
    if 1.0 - cfg.beta <= DENOMINATOR_TOL:
        # no ON-phase bandwidth: any pool load is infinitely congested
        return lambda level: 0.0
    h = lambda t: (1.0 - cfg.alpha) * g(t) + cfg.alpha * g(t / (1.0 - cfg.beta))
    return lambda level: invert_increasing(h, level) if level > 0 else 0.0


def _monopoly_on_licensed(b: float, g: CongestionFn, P: DemandCurve) -> float:
    """Mass solving xP'(x) + P(x) = g(x/b) + (x/b)g'(x/b)."""
    residual = lambda x: P(x) + x * P.deriv(x) - g(x / b) - (x / b) * g.deriv(x / b)
    if residual(P.q_max) >= 0:
        return P.q_max
    return bisect_root(residual, 0.0, P.q_max, xtol=1e-14)


def _check_small_w(cfg: MarketConfig) -> None:
    if cfg.w_asymptotic:
        raise InvalidConfig("Small-W slopes need a finite W configuration.", field="W")


def small_w_slopes(cfg: MarketConfig, g: CongestionFn, P: DemandCurve) -> SmallWSlopes:
    """
    Social-welfare slopes dSW/dW at W -> 0 without and with LTE-U.

    Linearizes the incumbent's first-order condition around the monopoly mass
    x* on the licensed band while the unlicensed pool carries c*W customers,
    c being the load at which the pool congestion reaches P(x*).
    """
    _check_small_w(cfg)
    b = cfg.gamma * cfg.B
    x_star = _monopoly_on_licensed(b, g, P)
    t_star = x_star / b
    dp, dp2 = P.deriv(x_star), P.deriv2(x_star)
    denominator = 2.0 * g.deriv(t_star) / b + x_star * g.deriv2(t_star) / (b * b) - 2.0 * dp - x_star * dp2
    level = P(x_star)

    slopes = []
    for lteu in (False, True):
        load = _pool_congestion_inverse(cfg, g, lteu)(level)
        mass_rate = (dp + x_star * dp2) * load / denominator
        slopes.append(-x_star * dp * mass_rate)
    _logger.debug("Small-W slopes at x*=%g: off=%g on=%g", x_star, slopes[0], slopes[1])
    return SmallWSlopes(*slopes)


def small_w_reduced_mass(cfg: MarketConfig, g: CongestionFn, P: DemandCurve, w: float, lteu: bool) -> float:
    """
    Incumbent mass maximizing x1[P(x1 + c*w) - g(x1/(gamma*B))] for a pool of c*w customers.

    This is the program whose first-order expansion gives small_w_slopes.
    """
    _check_small_w(cfg)
    b = cfg.gamma * cfg.B
    x_star = _monopoly_on_licensed(b, g, P)
    pool = _pool_congestion_inverse(cfg, g, lteu)(P(x_star)) * w
    x1, _ = golden_section_max(lambda x: x * (P(x + pool) - g(x / b)), 0.0, P.q_max)
    return x1


def small_w_fd_slopes(cfg: MarketConfig, g: CongestionFn, P: DemandCurve, w: float = 1e-4) -> SmallWSlopes:
    """Finite-difference counterpart of small_w_slopes built on small_w_reduced_mass."""
    _check_small_w(cfg)
    b = cfg.gamma * cfg.B
    x_star = _monopoly_on_licensed(b, g, P)
    slopes = []
    for lteu in (False, True):
        base = small_w_reduced_mass(cfg, g, P, 0.0, lteu)
        shifted = small_w_reduced_mass(cfg, g, P, w, lteu)
        slopes.append(-x_star * P.deriv(x_star) * (shifted - base) / w)
    return SmallWSlopes(*slopes)


def sw_gap_asymptotic(B: float, alpha_list: Iterable[float], gamma: float = 1.0) -> list[float]:
    """
    Licensed-sharing social welfare gain from LTE-U as W -> inf, per duty cycle.

    The equivalent licensed bandwidth tends to gamma*B/(1 - alpha).
    """
    if not B > 0:
        raise InvalidConfig(f"Licensed bandwidth B must be positive, got {B}.", field="B")
    demand = DemandCurve.linear()
    baseline = welfare_report(licensed_sharing_asymptotic(gamma * B, False), demand).social_welfare
    gaps = []
    for alpha in alpha_list:
        if not 0.0 <= alpha < 1.0:
            raise InvalidConfig(
                f"Duty cycle must lie in [0, 1) for the asymptotic welfare gap, got {alpha}.", field="alpha"
            )
        outcome = licensed_sharing_asymptotic(gamma * B / (1.0 - alpha))
        gaps.append(welfare_report(outcome, demand).social_welfare - baseline)
    return gaps
