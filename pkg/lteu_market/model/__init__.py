"""
Market model: parameters, congestion and demand functions, equivalent bandwidths.
"""

from .bands import (
    EffectiveBands,
    effective_bands,
    entrant_congestion,
    entrant_mass_at,
    gamma_threshold,
    incumbent_congestion,
    incumbent_mass_at,
)
from .config import DEFAULT_ENTRANTS, EntrantRegime, MarketConfig
from .functions import CongestionFn, CongestionKind, DemandCurve, DemandKind

__all__ = [
    "CongestionFn",
    "CongestionKind",
    "DEFAULT_ENTRANTS",
    "DemandCurve",
    "DemandKind",
    "EffectiveBands",
    "EntrantRegime",
    "MarketConfig",
    "effective_bands",
    "entrant_congestion",
    "entrant_mass_at",
    "gamma_threshold",
    "incumbent_congestion",
    "incumbent_mass_at",
]
