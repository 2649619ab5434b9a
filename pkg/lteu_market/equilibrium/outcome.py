"""
Equilibrium outcome record shared by every solver.
"""

import dataclasses
from dataclasses import dataclass
from typing import Optional

from ..model.config import EntrantRegime


@dataclass(frozen=True)
class EquilibriumOutcome:
    """
    Prices and customer masses at a market equilibrium.

    Every regime is described by two services: the incumbent's primary service
    (``p_incumbent``/``x_incumbent``) and the unlicensed pool served by the
    entrants (``p_entrant``/``w_total``). In a monopoly the incumbent runs the
    pool itself; the licensed/unlicensed fields then repeat both services and
    ``revenue_incumbent`` covers both.
    """
    regime: EntrantRegime
    lteu_enabled: bool
    p_incumbent: float
    x_incumbent: float
    p_entrant: float
    w_total: float
    delivered_price: float
    revenue_incumbent: float
    revenue_entrants_total: float
    p_licensed: Optional[float] = None
    x_licensed: Optional[float] = None
    p_unlicensed: Optional[float] = None
    x_unlicensed: Optional[float] = None
    method: str = ""

    @property
    def total_mass(self) -> float:
        """Total served mass Q."""
        return self.x_incumbent + self.w_total

    @property
    def prices(self) -> list[float]:
        """Service prices in wardrop_split order: [incumbent, pool]."""
        return [self.p_incumbent, self.p_entrant]

    @property
    def is_monopoly(self) -> bool:
        return self.regime is EntrantRegime.NONE

    def with_prices(self, p_incumbent: Optional[float] = None, p_entrant: Optional[float] = None) -> "EquilibriumOutcome":
        """Copy with announced prices changed and masses left as they were (for deviation checks)."""
        changes = {}
        if p_incumbent is not None:
            changes["p_incumbent"] = p_incumbent
            if self.p_licensed is not None:
                changes["p_licensed"] = p_incumbent
        if p_entrant is not None:
            changes["p_entrant"] = p_entrant
            if self.p_unlicensed is not None:
                changes["p_unlicensed"] = p_entrant
        return dataclasses.replace(self, **changes)


def monopoly_outcome(
    lteu_enabled: bool,
    p_licensed: float,
    x_licensed: float,
    p_unlicensed: float,
    x_unlicensed: float,
    delivered_price: float,
    method: str,
) -> EquilibriumOutcome:
    """Build a monopoly outcome from its two services."""
    return EquilibriumOutcome(
        regime=EntrantRegime.NONE,
        lteu_enabled=lteu_enabled,
        p_incumbent=p_licensed,
        x_incumbent=x_licensed,
        p_entrant=p_unlicensed,
        w_total=x_unlicensed,
        delivered_price=delivered_price,
        revenue_incumbent=p_licensed * x_licensed + p_unlicensed * x_unlicensed,
        revenue_entrants_total=0.0,
        p_licensed=p_licensed,
        x_licensed=x_licensed,
        p_unlicensed=p_unlicensed,
        x_unlicensed=x_unlicensed,
        method=method,
    )
