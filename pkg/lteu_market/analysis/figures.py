"""
Figure presets: named parameter sweeps for the standard result curves.

Curve presets are a list of curves; a curve is a base configuration plus the
grid to sweep. Presets with several curves label each one so the CLI can write
one CSV per curve. The region preset traces the licensed-sharing W threshold
over a B grid instead of sweeping a single parameter.

Presets are keyed fig1..fig8; every key also has a descriptive alias.
"""

import logging
from dataclasses import dataclass
from typing import Optional

import numpy as np

from ..errors import InvalidConfig
from ..model.config import EntrantRegime, MarketConfig
from ..model.functions import CongestionFn, DemandCurve
from .sweeps import SweepResult, fixed_k_sweep, sweep
from .thresholds import RevenueGainBoundary, revenue_gain_boundary

_logger = logging.getLogger(__name__)

FIXED_K = 0.2


@dataclass(frozen=True)
class CurveSpec:
    label: str
    cfg: MarketConfig
    parameter: str
    grid: np.ndarray
    k: Optional[float] = None


@dataclass(frozen=True)
class RegionSpec:
    cfg: MarketConfig
    b_grid: np.ndarray
    bracket: tuple[float, float]


def _multi(**kwargs) -> MarketConfig:
    return MarketConfig(regime=EntrantRegime.MULTI, n_entrants=2, **kwargs)


def _licensed(**kwargs) -> MarketConfig:
    return MarketConfig(regime=EntrantRegime.ONE_LICENSED, n_entrants=1, **kwargs)


def _alpha_above_k(k: float = FIXED_K) -> np.ndarray:
    return np.linspace(k + 0.005, 1.0, 160)


def _revenue_gain_region() -> RegionSpec:
    cfg = _licensed(B=1.0, W=1.0, alpha=0.5, beta=0.5)
    return RegionSpec(cfg, np.round(np.linspace(0.1, 5.0, 50), 10), (1e-3, 1e4))


def _optimal_duty_cycle() -> list[CurveSpec]:
    grid = np.round(np.arange(1000) * 1e-3, 3)
    return [CurveSpec("", _licensed(B=1.0, W=np.inf, beta=0.2), "alpha", grid)]


def _fixed_k(W: float) -> list[CurveSpec]:
    return [CurveSpec("", _multi(B=1.0, W=W), "alpha", _alpha_above_k(), k=FIXED_K)]


def _multi_small_b() -> list[CurveSpec]:
    cfg = _multi(B=0.01, W=1.0, alpha=0.5, beta=0.5, gamma=5.0)
    return [CurveSpec("", cfg, "W", np.linspace(0.01, 10.0, 400))]


def _licensed_w_revenue() -> list[CurveSpec]:
    cfg = _licensed(B=5.0, W=1.0, alpha=0.5, beta=0.5)
    return [CurveSpec("", cfg, "W", np.geomspace(0.1, 1000.0, 400))]


def _licensed_w_welfare() -> list[CurveSpec]:
    cfg = _licensed(B=5.0, W=1.0, alpha=0.5, beta=0.5)
    return [CurveSpec("", cfg, "W", np.geomspace(0.1, 1e5, 500))]


def _licensed_b() -> list[CurveSpec]:
    grid = np.linspace(0.05, 5.0, 100)
    return [
        CurveSpec(f"alpha{alpha:g}", _licensed(B=1.0, W=np.inf, alpha=alpha, beta=0.5), "B", grid)
        for alpha in (0.2, 0.4, 0.6, 0.8)
    ]


def _multi_alpha() -> list[CurveSpec]:
    grid = np.linspace(0.0, 1.0, 101)
    return [
        CurveSpec(f"beta{beta:g}_W{W:g}", _multi(B=1.0, W=W, beta=beta), "alpha", grid)
        for W in (0.1, 1.0)
        for beta in (0.2, 0.5, 0.8)
    ]


def _fixed_k_pair() -> list[CurveSpec]:
    return [CurveSpec(f"W{W:g}", _multi(B=1.0, W=W), "alpha", _alpha_above_k(), k=FIXED_K) for W in (0.2, 5.0)]


def _multi_w() -> list[CurveSpec]:
    grid = np.linspace(0.01, 10.0, 200)
    return [
        CurveSpec(f"alpha{alpha:g}_beta{beta:g}", _multi(B=1.0, W=1.0, alpha=alpha, beta=beta), "W", grid)
        for alpha, beta in ((0.2, 0.5), (0.5, 0.5), (0.5, 0.8))
    ]


FIGURE_PRESETS = {
    "fig2": _optimal_duty_cycle,
    "fig3a": lambda: _fixed_k(1.0),
    "fig3b": lambda: _fixed_k(100.0),
    "fig4": _multi_small_b,
    "fig5a": _licensed_w_revenue,
    "fig5b": _licensed_w_welfare,
    "fig6": _licensed_b,
    "fig7": _multi_alpha,
    "fig8": _fixed_k_pair,
    "multi_w": _multi_w,
}

REGION_PRESETS = {
    "fig1": _revenue_gain_region,
}

PRESET_ALIASES = {
    "revenue_gain_region": "fig1",
    "optimal_duty_cycle": "fig2",
    "fixed_k_w1": "fig3a",
    "fixed_k_w100": "fig3b",
    "multi_small_b": "fig4",
    "licensed_w_revenue": "fig5a",
    "licensed_w_welfare": "fig5b",
    "licensed_b": "fig6",
    "multi_alpha": "fig7",
    "fixed_k_pair": "fig8",
}


def preset_names() -> list[str]:
    """Every accepted preset name, aliases included."""
    return sorted({*FIGURE_PRESETS, *REGION_PRESETS, *PRESET_ALIASES})


def resolve_preset(name: str) -> str:
    """Canonical key of a preset name or alias."""
    key = PRESET_ALIASES.get(name, name)
    if key not in FIGURE_PRESETS and key not in REGION_PRESETS:
        raise InvalidConfig(f"Unknown figure preset '{name}'. Available presets: {', '.join(preset_names())}.")
    return key


def is_region_preset(name: str) -> bool:
    return resolve_preset(name) in REGION_PRESETS


def figure_curves(name: str) -> list[CurveSpec]:
    """Curve specifications of a curve preset."""
    key = resolve_preset(name)
    if key in REGION_PRESETS:
        raise InvalidConfig(f"Preset '{name}' traces a region, not curves. Use run_region.")
    return FIGURE_PRESETS[key]()


def run_figure(name: str, threads: int = 1) -> list[tuple[str, SweepResult]]:
    """
    Run every curve of a preset with linear congestion and demand.

    Returns:
        List of (label, SweepResult); the label is empty for single-curve presets.
    """
    g, P = CongestionFn.linear(), DemandCurve.linear()
    results = []
    for spec in figure_curves(name):
        _logger.info("Figure %s curve '%s': %s over %d values", name, spec.label, spec.parameter, len(spec.grid))
        if spec.k is not None:
            result = fixed_k_sweep(spec.cfg, spec.k, spec.grid, g, P, threads=threads)
        else:
            result = sweep(spec.cfg, spec.parameter, spec.grid, g, P, threads=threads)
        results.append((spec.label, result))
    return results


def run_region(name: str) -> RevenueGainBoundary:
    """Trace the W threshold of a region preset over its B grid."""
    key = resolve_preset(name)
    if key not in REGION_PRESETS:
        raise InvalidConfig(f"Preset '{name}' is a curve preset. Use run_figure.")
    spec = REGION_PRESETS[key]()
    _logger.info("Figure %s: W threshold over %d values of B", name, len(spec.b_grid))
    return revenue_gain_boundary(spec.cfg, spec.b_grid, spec.bracket)
