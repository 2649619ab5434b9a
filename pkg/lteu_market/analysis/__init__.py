"""
Welfare analysis, threshold searches, sweeps and figure presets.
"""

from .figures import (
    FIGURE_PRESETS,
    PRESET_ALIASES,
    REGION_PRESETS,
    CurveSpec,
    RegionSpec,
    figure_curves,
    preset_names,
    resolve_preset,
    run_figure,
    run_region,
)
from .sweeps import SweepParameter, SweepResult, SweepRow, fixed_k_sweep, sweep
from .thresholds import (
    AlphaOptimum,
    BoundaryPoint,
    CSGainRegion,
    Metric,
    RevenueGainBoundary,
    SearchParameter,
    SharingComparison,
    ThresholdQuery,
    ThresholdResult,
    compare_sharing_modes,
    cs_gain_region,
    find_threshold,
    metric_difference,
    metric_value,
    optimal_alpha,
    revenue_gain_boundary,
)
from .welfare import (
    SmallWSlopes,
    WelfareReport,
    consumer_surplus,
    small_w_fd_slopes,
    small_w_reduced_mass,
    small_w_slopes,
    sw_gap_asymptotic,
    welfare_report,
)

__all__ = [
    "AlphaOptimum",
    "BoundaryPoint",
    "CSGainRegion",
    "CurveSpec",
    "FIGURE_PRESETS",
    "PRESET_ALIASES",
    "REGION_PRESETS",
    "RegionSpec",
    "Metric",
    "RevenueGainBoundary",
    "SearchParameter",
    "SharingComparison",
    "SmallWSlopes",
    "SweepParameter",
    "SweepResult",
    "SweepRow",
    "ThresholdQuery",
    "ThresholdResult",
    "WelfareReport",
    "compare_sharing_modes",
    "consumer_surplus",
    "cs_gain_region",
    "figure_curves",
    "find_threshold",
    "fixed_k_sweep",
    "metric_difference",
    "metric_value",
    "optimal_alpha",
    "preset_names",
    "resolve_preset",
    "revenue_gain_boundary",
    "run_figure",
    "run_region",
    "small_w_fd_slopes",
    "small_w_reduced_mass",
    "small_w_slopes",
    "sw_gap_asymptotic",
    "sweep",
    "welfare_report",
]
