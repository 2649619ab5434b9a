"""
Equilibrium solvers: Wardrop splits, per-regime price equilibria and the Nash check.
"""

from .homogeneous import HomogeneousWelfare, homogeneous_sw, solve_homogeneous_multi
from .monopoly import solve_monopoly
from .multi_entrant import solve_multi_entrant, zero_price_pool_mass
from .nash import Deviation, NashReport, verify_nash
from .one_entrant import licensed_sharing_asymptotic, solve_one_entrant_licensed, solve_one_entrant_unlicensed
from .outcome import EquilibriumOutcome
from .wardrop import WardropState, wardrop_split, wardrop_state, wardrop_violation

__all__ = [
    "Deviation",
    "EquilibriumOutcome",
    "HomogeneousWelfare",
    "NashReport",
    "WardropState",
    "homogeneous_sw",
    "licensed_sharing_asymptotic",
    "solve_homogeneous_multi",
    "solve_monopoly",
    "solve_multi_entrant",
    "solve_one_entrant_licensed",
    "solve_one_entrant_unlicensed",
    "verify_nash",
    "wardrop_split",
    "wardrop_state",
    "wardrop_violation",
    "zero_price_pool_mass",
]
