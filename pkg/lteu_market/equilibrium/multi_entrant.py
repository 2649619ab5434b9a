"""
Incumbent facing two or more entrants on the unlicensed band.

Price competition among identical entrants drives their price to zero, so the
pool absorbs customers until its congestion equals the delivered price. The
incumbent then chooses its own mass against that residual demand.
"""

import logging

from ..errors import InvalidConfig
from ..model.bands import effective_bands, entrant_congestion, incumbent_congestion
from ..model.config import EntrantRegime, MarketConfig
from ..model.functions import CongestionFn, DemandCurve
from ..numerics import bisect_root, golden_section_max
from .homogeneous import solve_homogeneous_multi
from .outcome import EquilibriumOutcome

_logger = logging.getLogger(__name__)

_ZERO_PRICE_REGIMES = (EntrantRegime.MULTI, EntrantRegime.ONE_UNLICENSED)


def solve_multi_entrant(cfg: MarketConfig, g: CongestionFn, P: DemandCurve) -> EquilibriumOutcome:
    """
    Equilibrium with the entrants' price fixed at zero.

    Linear congestion and demand use the closed form; linear congestion with
    step demand uses the three-region case analysis; anything else maximizes
    the incumbent's revenue over x1 by golden-section search with the pool mass
    found by bisection.

    Raises:
        InvalidConfig: If the regime does not have a zero-price unlicensed pool.
        DegenerateDenominator: Propagated from the equivalent bandwidths.
        SolverNoConverge: If a numeric search exhausts its iterations.
    """
    if cfg.regime not in _ZERO_PRICE_REGIMES:
        raise InvalidConfig(
            f"solve_multi_entrant needs regime 'multi' or 'one_unlicensed_sharing', got '{cfg.regime.value}'.",
            field="regime",
        )

    bands = effective_bands(cfg)
    _logger.debug("Multi-entrant %s, bands b_e=%g w_e=%g", cfg.describe(), bands.b_e, bands.w_e)

    if bands.asymptotic:
        # free, uncongested pool: everyone served at delivered price 0
        total = P.inverse(0.0)
        return _outcome(cfg, 0.0, 0.0, total, 0.0, "asymptotic")

    if g.is_linear and P.is_homogeneous:
        return solve_homogeneous_multi(cfg, P)

    if g.is_linear and P.is_linear:
        b, w = bands.b_e, bands.w_e
        p1 = 1.0 / (2.0 * (1.0 + w))
        x1 = b / (2.0 * (1.0 + b + w))
        w_total = w * (2.0 + 2.0 * w + b) / (2.0 * (1.0 + w) * (1.0 + b + w))
        return _outcome(cfg, p1, x1, w_total, p1 + x1 / b, "closed_form")

    return _solve_numeric(cfg, g, P)


def zero_price_pool_mass(x1: float, cfg: MarketConfig, g: CongestionFn, P: DemandCurve) -> float:
    """Pool mass w with entrant congestion g_en(w) = P(x1 + w), the pool being free."""
    room = P.q_max - x1
    if cfg.W == 0 or room <= 0:
        return 0.0
    gap = lambda w: entrant_congestion(w, cfg, g) - P(x1 + w)
    if gap(0.0) >= 0:
        return 0.0
    if gap(room) <= 0:
        return room
    return bisect_root(gap, 0.0, room, xtol=1e-12)


def _delivered(x1: float, w_total: float, cfg: MarketConfig, g: CongestionFn, P: DemandCurve) -> float:
    if w_total > 0:
        return entrant_congestion(w_total, cfg, g)
    return P(x1)


def _solve_numeric(cfg: MarketConfig, g: CongestionFn, P: DemandCurve) -> EquilibriumOutcome:
    def revenue(x1: float) -> float:
        w_total = zero_price_pool_mass(x1, cfg, g, P)
        return x1 * (_delivered(x1, w_total, cfg, g, P) - incumbent_congestion(x1, cfg, g))

    x1, _ = golden_section_max(revenue, 0.0, P.q_max)
    w_total = zero_price_pool_mass(x1, cfg, g, P)
    delivered = _delivered(x1, w_total, cfg, g, P)
    p1 = delivered - incumbent_congestion(x1, cfg, g)
    return _outcome(cfg, p1, x1, w_total, delivered, "numeric")


def _outcome(cfg: MarketConfig, p1: float, x1: float, w_total: float, delivered: float, method: str) -> EquilibriumOutcome:
    _logger.debug("Multi-entrant %s: p1=%g x1=%g w_t=%g d=%g", method, p1, x1, w_total, delivered)
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
