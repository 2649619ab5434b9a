"""
Solver interface for the market model.

This module defines the contract between the analysis layer (welfare, sweeps,
thresholds, CLI) and the per-regime equilibrium solvers.
"""

import logging
from abc import ABC, abstractmethod

from .equilibrium.monopoly import solve_monopoly
from .equilibrium.multi_entrant import solve_multi_entrant
from .equilibrium.one_entrant import solve_one_entrant_licensed, solve_one_entrant_unlicensed
from .equilibrium.outcome import EquilibriumOutcome
from .errors import InvalidConfig
from .model.config import EntrantRegime, MarketConfig
from .model.functions import CongestionFn, DemandCurve

_logger = logging.getLogger(__name__)


class EquilibriumSolver(ABC):
    """
    Abstract interface for one entrant regime.

    Defines the contract between the analysis layer and the solvers.
    """

    regime: EntrantRegime

    @abstractmethod
    def solve(self, cfg: MarketConfig, g: CongestionFn, P: DemandCurve) -> EquilibriumOutcome:
        """
        Compute the equilibrium prices and masses.

        Args:
            cfg: Market configuration; its regime must match the solver
            g: Congestion function
            P: Inverse demand

        Returns:
            EquilibriumOutcome for the configuration's lteu flag
        """
        pass

    def supports(self, g: CongestionFn, P: DemandCurve) -> bool:
        """
        Whether this solver handles the given function kinds.

        Args:
            g: Congestion function
            P: Inverse demand

        Returns:
            True unless the regime only has a closed form for other kinds
        """
        return True

    def solve_pair(
        self, cfg: MarketConfig, g: CongestionFn, P: DemandCurve
    ) -> dict[bool, EquilibriumOutcome]:
        """
        Solve with LTE-U off and on.

        Returns:
            Dictionary keyed by the lteu flag
        """
        return {flag: self.solve(cfg.with_lteu(flag), g, P) for flag in (False, True)}


class MonopolySolver(EquilibriumSolver):
    """Incumbent alone, serving both bands."""

    regime = EntrantRegime.NONE

    def solve(self, cfg: MarketConfig, g: CongestionFn, P: DemandCurve) -> EquilibriumOutcome:
        return solve_monopoly(cfg, g, P)


class MultiEntrantSolver(EquilibriumSolver):
    """Two or more entrants pricing the unlicensed band at zero."""

    regime = EntrantRegime.MULTI

    def solve(self, cfg: MarketConfig, g: CongestionFn, P: DemandCurve) -> EquilibriumOutcome:
        return solve_multi_entrant(cfg, g, P)


class LicensedSharingSolver(EquilibriumSolver):
    """One entrant with exclusive use of the unlicensed band."""

    regime = EntrantRegime.ONE_LICENSED

    def solve(self, cfg: MarketConfig, g: CongestionFn, P: DemandCurve) -> EquilibriumOutcome:
        return solve_one_entrant_licensed(cfg, g, P)

    def supports(self, g: CongestionFn, P: DemandCurve) -> bool:
        return g.is_linear and P.is_linear


class UnlicensedSharingSolver(EquilibriumSolver):
    """One entrant competing head-to-head with the incumbent on the unlicensed band."""

    regime = EntrantRegime.ONE_UNLICENSED

    def solve(self, cfg: MarketConfig, g: CongestionFn, P: DemandCurve) -> EquilibriumOutcome:
        return solve_one_entrant_unlicensed(cfg, g, P)


_SOLVERS: dict[EntrantRegime, type[EquilibriumSolver]] = {
    EntrantRegime.NONE: MonopolySolver,
    EntrantRegime.MULTI: MultiEntrantSolver,
    EntrantRegime.ONE_LICENSED: LicensedSharingSolver,
    EntrantRegime.ONE_UNLICENSED: UnlicensedSharingSolver,
}


def get_solver(regime: EntrantRegime) -> EquilibriumSolver:
    """
    Factory function to get the solver for a regime.

    Returns:
        EquilibriumSolver implementation
    """
    try:
        return _SOLVERS[EntrantRegime(regime)]()
    except (KeyError, ValueError):
        raise InvalidConfig(f"No solver registered for regime '{regime}'.", field="regime") from None


def solve_equilibrium(cfg: MarketConfig, g: CongestionFn, P: DemandCurve) -> EquilibriumOutcome:
    """Solve a configuration with the solver of its own regime."""
    return get_solver(cfg.regime).solve(cfg, g, P)
