"""
Equivalent-bandwidth algebra and the per-service congestion maps.

With LTE-U the incumbent borrows a share beta of the unlicensed band for a
fraction alpha of the time. Under linear congestion the time-averaged costs
equal single-band costs on the equivalent bandwidths b_e and w_e computed here.
"""

import logging
import math
from dataclasses import dataclass

from ..errors import DegenerateDenominator, InvalidConfig
from .config import MarketConfig
from .functions import CongestionFn
from ..numerics import invert_increasing

_logger = logging.getLogger(__name__)

# 1 - beta(1 - alpha) and (1 - beta) are treated as zero below this
DENOMINATOR_TOL = 1e-12


@dataclass(frozen=True)
class EffectiveBands:
    """Equivalent licensed and unlicensed bandwidths. ``w_e`` is inf when W is asymptotic."""
    b_e: float
    w_e: float
    asymptotic: bool = False

    @property
    def total(self) -> float:
        return self.b_e + self.w_e


def _check_denominator(cfg: MarketConfig) -> None:
    if 1.0 - cfg.beta * (1.0 - cfg.alpha) <= DENOMINATOR_TOL:
        raise DegenerateDenominator(
            f"1 - beta(1 - alpha) vanishes at alpha = {cfg.alpha}, beta = {cfg.beta} (W = {cfg.W}); "
            f"the unlicensed equivalent bandwidth is undefined. Use beta < 1, alpha > 0 or disable LTE-U."
        )


def effective_bands(cfg: MarketConfig) -> EffectiveBands:
    """
    Equivalent bandwidths (b_e, w_e) of a configuration.

    Args:
        cfg: Market configuration

    Returns:
        EffectiveBands. Without LTE-U (or with alpha = 0 or beta = 0) this is
        (gamma*B, W). With asymptotic W the licensed side tends to
        gamma*B/(1 - alpha) and w_e is infinite. With beta = 1 and alpha > 0 the
        entrants lose the whole band while the incumbent is on, so w_e = 0;
        alpha = beta = 1 gives (gamma*(B + W), 0).

    Raises:
        DegenerateDenominator: LTE-U is on, W > 0 and 1 - beta(1 - alpha) is
            zero (beta = 1 with alpha = 0).
        InvalidConfig: Asymptotic W combined with alpha = 1.
    """
    if cfg.lteu_enabled and cfg.W > 0:
        _check_denominator(cfg)
    if not cfg.lteu_active or cfg.W == 0:
        return EffectiveBands(cfg.gamma * cfg.B, cfg.W, asymptotic=cfg.w_asymptotic)

    if cfg.w_asymptotic:
        if cfg.alpha >= 1.0:
            raise InvalidConfig(
                "Asymptotic W with alpha = 1 gives an unbounded equivalent licensed bandwidth. "
                "Use alpha < 1 or a finite W.",
                field="alpha",
            )
        return EffectiveBands(cfg.gamma * cfg.B / (1.0 - cfg.alpha), math.inf, asymptotic=True)

    off_share = cfg.beta * (1.0 - cfg.alpha)
    borrowed = cfg.alpha * cfg.beta * cfg.W
    b_e = cfg.gamma * (cfg.B + borrowed / (1.0 + off_share * cfg.W / cfg.B))
    w_e = max(cfg.W - borrowed / (1.0 - off_share), 0.0)
    return EffectiveBands(b_e, w_e)


def incumbent_congestion(x1: float, cfg: MarketConfig, g: CongestionFn) -> float:
    """Time-averaged congestion of mass x1 on the incumbent's primary service."""
    if x1 < 0:
        raise InvalidConfig(f"Customer mass must be non-negative, got {x1}.")
    licensed = cfg.gamma * cfg.B
    if not cfg.lteu_active:
        return g(x1 / licensed)
    if cfg.w_asymptotic:
        # the ON phase spreads x1 over an unbounded band
        return (1.0 - cfg.alpha) * g(x1 / licensed)
    aggregated = cfg.gamma * (cfg.B + cfg.beta * cfg.W)
    return cfg.alpha * g(x1 / aggregated) + (1.0 - cfg.alpha) * g(x1 / licensed)


def entrant_congestion(w_t: float, cfg: MarketConfig, g: CongestionFn) -> float:
    """Time-averaged congestion of total mass w_t on the unlicensed band."""
    if w_t < 0:
        raise InvalidConfig(f"Customer mass must be non-negative, got {w_t}.")
    if w_t == 0:
        return 0.0
    if cfg.w_asymptotic:
        return 0.0
    if cfg.W == 0:
        return math.inf
    if not cfg.lteu_active:
        return g(w_t / cfg.W)
    on_band = (1.0 - cfg.beta) * cfg.W
    if on_band <= DENOMINATOR_TOL * cfg.W:
        return math.inf
    return cfg.alpha * g(w_t / on_band) + (1.0 - cfg.alpha) * g(w_t / cfg.W)


def incumbent_mass_at(level: float, cfg: MarketConfig, g: CongestionFn, bands: EffectiveBands) -> float:
    """Mass x >= 0 whose incumbent congestion equals ``level`` (0 for level <= 0)."""
    if level <= 0:
        return 0.0
    if g.is_linear:
        return level * bands.b_e
    return invert_increasing(lambda x: incumbent_congestion(x, cfg, g), level, hi=max(bands.b_e, 1.0))


def entrant_mass_at(level: float, cfg: MarketConfig, g: CongestionFn, bands: EffectiveBands) -> float:
    """
    Mass w >= 0 whose unlicensed-band congestion equals ``level``.

    Infinite for a positive level when W is asymptotic; 0 when W = 0.
    """
    if level <= 0 or cfg.W == 0:
        return 0.0
    if cfg.w_asymptotic:
        return math.inf
    if bands.w_e <= 0:
        return 0.0
    if g.is_linear:
        return level * bands.w_e
    return invert_increasing(lambda w: entrant_congestion(w, cfg, g), level, hi=max(bands.w_e, 1.0))


def gamma_threshold(cfg: MarketConfig) -> float:
    """
    Spectral-efficiency factor above which LTE-U raises monopoly revenue.

    Returns (1 + beta(1-alpha)W/B) / (1 - beta(1-alpha)).
    """
    if cfg.w_asymptotic or not cfg.W > 0:
        raise InvalidConfig(f"The gamma threshold needs a finite W > 0, got W = {cfg.W}.", field="W")
    off_share = cfg.beta * (1.0 - cfg.alpha)
    denominator = 1.0 - off_share
    if denominator <= DENOMINATOR_TOL:
        raise DegenerateDenominator(
            f"1 - beta(1 - alpha) vanishes at alpha = {cfg.alpha}, beta = {cfg.beta}; no finite gamma threshold."
        )
    return (1.0 + off_share * cfg.W / cfg.B) / denominator
