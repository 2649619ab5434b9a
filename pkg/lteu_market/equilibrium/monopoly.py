"""
Monopoly incumbent serving both the licensed band and the unlicensed pool.
"""

import logging

from ..errors import InvalidConfig
from ..model.bands import EffectiveBands, effective_bands, entrant_congestion, incumbent_congestion
from ..model.config import EntrantRegime, MarketConfig
from ..model.functions import CongestionFn, DemandCurve
from ..numerics import golden_section_max
from .outcome import EquilibriumOutcome, monopoly_outcome

_logger = logging.getLogger(__name__)


def solve_monopoly(cfg: MarketConfig, g: CongestionFn, P: DemandCurve) -> EquilibriumOutcome:
    """
    Revenue-maximizing prices of a monopolist with a licensed and an unlicensed service.

    Linear congestion makes both services share one congestion level at the
    optimum, so the problem collapses to a single service on b_e + w_e. Other
    congestion functions are solved as a concave program in (x_l, x_u).

    Raises:
        InvalidConfig: If the configuration has entrants.
        SolverNoConverge: If a golden-section search exhausts its iterations.
    """
    if cfg.regime is not EntrantRegime.NONE:
        raise InvalidConfig(f"solve_monopoly needs regime 'none', got '{cfg.regime.value}'.", field="regime")

    bands = effective_bands(cfg)
    _logger.debug("Monopoly %s, bands b_e=%g w_e=%g", cfg.describe(), bands.b_e, bands.w_e)

    if bands.asymptotic:
        return _solve_unbounded_pool(cfg, P)
    if g.is_linear:
        return _solve_equal_congestion(cfg, bands, P)
    return _solve_two_services(cfg, g, P)


def _solve_unbounded_pool(cfg: MarketConfig, P: DemandCurve) -> EquilibriumOutcome:
    # A congestion-free pool beats any licensed price that would still sell.
    if P.is_linear:
        total, method = 0.5, "asymptotic"
    else:
        total, _ = golden_section_max(lambda q: q * P(q), 0.0, P.q_max)
        method = "asymptotic_numeric"
    price = P(total)
    return monopoly_outcome(cfg.lteu_enabled, price, 0.0, price, total, price, method)


def _solve_equal_congestion(cfg: MarketConfig, bands: EffectiveBands, P: DemandCurve) -> EquilibriumOutcome:
    total_band = bands.total
    if P.is_linear:
        total = total_band / (2.0 * (total_band + 1.0))
        method = "closed_form"
    else:
        total, _ = golden_section_max(lambda q: q * (P(q) - q / total_band), 0.0, P.q_max)
        method = "numeric"

    delivered = P(total)
    price = delivered - total / total_band
    x_licensed = total * bands.b_e / total_band
    x_unlicensed = total * bands.w_e / total_band
    _logger.debug("Monopoly equal-congestion solution Q=%g price=%g (%s)", total, price, method)
    return monopoly_outcome(cfg.lteu_enabled, price, x_licensed, price, x_unlicensed, delivered, method)


def _solve_two_services(cfg: MarketConfig, g: CongestionFn, P: DemandCurve) -> EquilibriumOutcome:
    has_pool = cfg.W > 0

    def revenue(x_l: float, x_u: float) -> float:
        demand_price = P(x_l + x_u)
        value = x_l * (demand_price - incumbent_congestion(x_l, cfg, g))
        if x_u > 0:
            value += x_u * (demand_price - entrant_congestion(x_u, cfg, g))
        return value

    def best_unlicensed(x_l: float) -> tuple[float, float]:
        if not has_pool:
            return 0.0, revenue(x_l, 0.0)
        return golden_section_max(lambda x_u: revenue(x_l, x_u), 0.0, max(P.q_max - x_l, 0.0))

    x_licensed, _ = golden_section_max(lambda x_l: best_unlicensed(x_l)[1], 0.0, P.q_max)
    x_unlicensed, _ = best_unlicensed(x_licensed)

    delivered = P(x_licensed + x_unlicensed)
    p_licensed = delivered - incumbent_congestion(x_licensed, cfg, g)
    p_unlicensed = delivered - entrant_congestion(x_unlicensed, cfg, g)
    _logger.debug(
        "Monopoly two-service solution x_l=%g x_u=%g p_l=%g p_u=%g", x_licensed, x_unlicensed, p_licensed, p_unlicensed
    )
    return monopoly_outcome(
        cfg.lteu_enabled, p_licensed, x_licensed, p_unlicensed, x_unlicensed, delivered, "numeric"
    )
