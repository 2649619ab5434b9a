"""
Incumbent facing a single entrant.

Licensed sharing: the incumbent stays on its licensed band (plus LTE-U) and the
entrant has the unlicensed band to itself, giving a two-firm price game with a
closed-form equilibrium under linear congestion and demand.

Unlicensed sharing: the incumbent also offers service on the unlicensed band,
head-to-head competition there prices it at zero and the market behaves like
the multi-entrant case.
"""

import logging

from ..errors import InvalidConfig, UnsupportedFunctions
from ..model.bands import effective_bands
from ..model.config import EntrantRegime, MarketConfig
from ..model.functions import CongestionFn, DemandCurve
from .multi_entrant import solve_multi_entrant
from .outcome import EquilibriumOutcome

_logger = logging.getLogger(__name__)


def solve_one_entrant_licensed(cfg: MarketConfig, g: CongestionFn, P: DemandCurve) -> EquilibriumOutcome:
    """
    Licensed-sharing equilibrium in terms of the equivalent bandwidths.

    Raises:
        InvalidConfig: If the regime is not licensed sharing.
        UnsupportedFunctions: Unless both g and P are linear.
    """
    if cfg.regime is not EntrantRegime.ONE_LICENSED:
        raise InvalidConfig(
            f"solve_one_entrant_licensed needs regime 'one_licensed_sharing', got '{cfg.regime.value}'.",
            field="regime",
        )
    if not (g.is_linear and P.is_linear):
        raise UnsupportedFunctions(
            f"Licensed sharing is only solved for linear congestion and demand, got g='{g.label}', P='{P.label}'."
        )

    bands = effective_bands(cfg)
    _logger.debug("Licensed sharing %s, bands b_e=%g w_e=%g", cfg.describe(), bands.b_e, bands.w_e)
    if bands.asymptotic:
        return licensed_sharing_asymptotic(bands.b_e, cfg.lteu_enabled)

    b, w = bands.b_e, bands.w_e
    denominator = 4.0 + 4.0 * b + 4.0 * w + 3.0 * b * w
    p1 = (2.0 + 2.0 * b + w) / denominator
    p2 = (2.0 + b + 2.0 * w) / denominator
    x1 = p1 * b * (1.0 + w) / (1.0 + b + w)
    x2 = p2 * w * (1.0 + b) / (1.0 + b + w)
    return _outcome(cfg.lteu_enabled, p1, x1, p2, x2, p1 + x1 / b, "closed_form")


def licensed_sharing_asymptotic(b_e: float, lteu_enabled: bool = True) -> EquilibriumOutcome:
    """
    Licensed-sharing equilibrium as W -> inf, for equivalent licensed bandwidth b_e.

    Prices and the incumbent mass equal the W -> inf limit of the finite-W closed
    form. The entrant mass (1 + b_e)/(4 + 3*b_e) is half of that limit, so CS and
    SW of this outcome (and sw_gap_asymptotic) differ from large-W solves.
    """
    scale = 4.0 + 3.0 * b_e
    p1 = 1.0 / scale
    x1 = b_e / scale
    p2 = 2.0 / scale
    x2 = (1.0 + b_e) / scale
    return _outcome(lteu_enabled, p1, x1, p2, x2, p2, "asymptotic")


def solve_one_entrant_unlicensed(cfg: MarketConfig, g: CongestionFn, P: DemandCurve) -> EquilibriumOutcome:
    """Unlicensed-sharing equilibrium: the unlicensed band is contested at price zero."""
    if cfg.regime is not EntrantRegime.ONE_UNLICENSED:
        raise InvalidConfig(
            f"solve_one_entrant_unlicensed needs regime 'one_unlicensed_sharing', got '{cfg.regime.value}'.",
            field="regime",
        )
    return solve_multi_entrant(cfg, g, P)


def _outcome(lteu_enabled: bool, p1: float, x1: float, p2: float, x2: float, delivered: float, method: str) -> EquilibriumOutcome:
    _logger.debug("Licensed sharing %s: p1=%g x1=%g p2=%g x2=%g", method, p1, x1, p2, x2)
    return EquilibriumOutcome(
        regime=EntrantRegime.ONE_LICENSED,
        lteu_enabled=lteu_enabled,
        p_incumbent=p1,
        x_incumbent=x1,
        p_entrant=p2,
        w_total=x2,
        delivered_price=delivered,
        revenue_incumbent=p1 * x1,
        revenue_entrants_total=p2 * x2,
        method=method,
    )
