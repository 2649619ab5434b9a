"""
Exogenous market parameters.

MarketConfig holds the bandwidths, the LTE-U duty cycle and spectrum share, the
spectral-efficiency factor and the entrant regime. It is immutable; use
``replace`` or ``with_lteu`` to derive variants for sweeps.
"""

import dataclasses
import math
from dataclasses import dataclass
from enum import Enum

from ..errors import InvalidConfig


class EntrantRegime(Enum):
    """Market structures the solvers understand."""
    MULTI = "multi"
    ONE_LICENSED = "one_licensed_sharing"
    ONE_UNLICENSED = "one_unlicensed_sharing"
    NONE = "none"


# Number of entrants assumed when a scenario does not say
DEFAULT_ENTRANTS = {
    EntrantRegime.MULTI: 2,
    EntrantRegime.ONE_LICENSED: 1,
    EntrantRegime.ONE_UNLICENSED: 1,
    EntrantRegime.NONE: 0,
}


@dataclass(frozen=True)
class MarketConfig:
    """
    All exogenous parameters of one market instance.

    ``W = math.inf`` is accepted as shorthand for ``w_asymptotic=True``; the
    stored W is then infinite and solvers branch to their W -> inf limits.
    """
    B: float = 1.0
    W: float = 1.0
    alpha: float = 0.0
    beta: float = 0.0
    gamma: float = 1.0
    n_entrants: int = 2
    lteu_enabled: bool = True
    regime: EntrantRegime = EntrantRegime.MULTI
    w_asymptotic: bool = False

    def __post_init__(self):
        if isinstance(self.regime, str):
            try:
                object.__setattr__(self, "regime", EntrantRegime(self.regime))
            except ValueError:
                choices = ", ".join(r.value for r in EntrantRegime)
                raise InvalidConfig(
                    f"Unknown entrant regime '{self.regime}'. Use one of: {choices}.",
                    field="regime",
                ) from None

        if math.isinf(self.W) and self.W > 0:
            object.__setattr__(self, "w_asymptotic", True)
        elif self.w_asymptotic:
            object.__setattr__(self, "W", math.inf)

        self._validate()

    def _validate(self) -> None:
        if not (self.B > 0 and math.isfinite(self.B)):
            raise InvalidConfig(f"Licensed bandwidth B must be positive and finite, got {self.B}.", field="B")
        if not self.W >= 0:
            raise InvalidConfig(f"Unlicensed bandwidth W must be non-negative, got {self.W}.", field="W")
        if not 0.0 <= self.alpha <= 1.0:
            raise InvalidConfig(f"Duty cycle alpha must lie in [0, 1], got {self.alpha}.", field="alpha")
        if not 0.0 <= self.beta <= 1.0:
            raise InvalidConfig(f"Spectrum share beta must lie in [0, 1], got {self.beta}.", field="beta")
        if not (self.gamma >= 1.0 and math.isfinite(self.gamma)):
            raise InvalidConfig(f"Spectral-efficiency factor gamma must be >= 1, got {self.gamma}.", field="gamma")
        if self.n_entrants < 0:
            raise InvalidConfig(f"Entrant count must be >= 0, got {self.n_entrants}.", field="n_entrants")

        if self.regime is EntrantRegime.NONE and self.n_entrants != 0:
            raise InvalidConfig(
                f"Regime 'none' requires n_entrants = 0, got {self.n_entrants}.", field="n_entrants"
            )
        if self.regime is not EntrantRegime.NONE and self.n_entrants == 0:
            raise InvalidConfig(
                f"Regime '{self.regime.value}' needs at least one entrant. Use regime 'none' for a monopoly.",
                field="n_entrants",
            )
        if self.regime is EntrantRegime.MULTI and self.n_entrants < 2:
            raise InvalidConfig(
                f"Regime 'multi' requires n_entrants >= 2, got {self.n_entrants}.", field="n_entrants"
            )
        if self.regime in (EntrantRegime.ONE_LICENSED, EntrantRegime.ONE_UNLICENSED) and self.n_entrants != 1:
            raise InvalidConfig(
                f"Regime '{self.regime.value}' requires exactly one entrant, got {self.n_entrants}.",
                field="n_entrants",
            )

    @property
    def lteu_active(self) -> bool:
        """True when LTE-U actually changes the bands (enabled with alpha, beta > 0)."""
        return self.lteu_enabled and self.alpha > 0 and self.beta > 0

    @property
    def utilization(self) -> float:
        """Time-bandwidth share k = alpha * beta of the unlicensed band."""
        return self.alpha * self.beta

    def replace(self, **changes) -> "MarketConfig":
        """Copy with some fields changed. Setting a finite W clears the asymptotic flag."""
        if "W" in changes and "w_asymptotic" not in changes:
            changes["w_asymptotic"] = math.isinf(changes["W"])
        return dataclasses.replace(self, **changes)

    def with_lteu(self, enabled: bool) -> "MarketConfig":
        """Copy with LTE-U switched on or off."""
        return dataclasses.replace(self, lteu_enabled=enabled)

    def describe(self) -> str:
        """One-line parameter summary for logs and CLI output."""
        w_text = "inf" if self.w_asymptotic else f"{self.W:g}"
        return (
            f"regime={self.regime.value} n={self.n_entrants} B={self.B:g} W={w_text} "
            f"alpha={self.alpha:g} beta={self.beta:g} gamma={self.gamma:g} "
            f"lteu={'on' if self.lteu_enabled else 'off'}"
        )
