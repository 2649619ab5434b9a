"""
Congestion and inverse-demand functions.

Both types wrap a plain callable and expose first and second derivatives.
Missing derivatives fall back to finite differences, so black-box functions
can be used wherever the closed forms need g', g'', P' or P''.
"""

import logging
import math
from dataclasses import dataclass
from enum import Enum
from typing import Callable, Optional

import numpy as np
from scipy import optimize

from ..errors import InvalidConfig
from ..numerics import derivative, invert_increasing, sample_grid, second_derivative

_logger = logging.getLogger(__name__)

ScalarFn = Callable[[float], float]

# Slack allowed when sampling sign conditions of derivatives
_SHAPE_TOL = 1e-7


class CongestionKind(Enum):
    """Congestion function families."""
    LINEAR = "linear"
    CUSTOM = "custom"


class DemandKind(Enum):
    """Inverse demand families."""
    LINEAR = "linear"
    HOMOGENEOUS = "homogeneous"
    CUSTOM = "custom"


@dataclass(frozen=True)
class CongestionFn:
    """
    Congestion cost g(t) as a function of load per unit bandwidth.

    Must satisfy g(0) = 0 and be convex and strictly increasing on [0, inf).
    """
    func: ScalarFn
    deriv_func: Optional[ScalarFn] = None
    deriv2_func: Optional[ScalarFn] = None
    kind: CongestionKind = CongestionKind.CUSTOM
    label: str = "custom"

    def __call__(self, t: float) -> float:
        return self.func(t)

    def eval(self, t: float) -> float:
        return self.func(t)

    def deriv(self, t: float) -> float:
        if self.deriv_func is not None:
            return self.deriv_func(t)
        return derivative(self.func, t)

    def deriv2(self, t: float) -> float:
        if self.deriv2_func is not None:
            return self.deriv2_func(t)
        return second_derivative(self.func, t)

    @property
    def is_linear(self) -> bool:
        return self.kind is CongestionKind.LINEAR

    def inverse(self, level: float) -> float:
        """Load t >= 0 with g(t) = level (0 for level <= 0)."""
        if level <= 0:
            return 0.0
        if self.is_linear:
            return level
        return invert_increasing(self.func, level)

    def validate(self, domain_max: float, points: int = 128) -> None:
        """
        Check g(0) = 0, g' >= 0 and g'' >= 0 on a sample grid over [0, domain_max].

        Raises:
            InvalidConfig: If any sampled condition fails.
        """
        if abs(self.func(0.0)) > _SHAPE_TOL:
            raise InvalidConfig(f"Congestion function '{self.label}' must satisfy g(0) = 0, got {self.func(0.0)}.")
        for t in sample_grid(domain_max, points):
            if self.deriv(t) < -_SHAPE_TOL:
                raise InvalidConfig(f"Congestion function '{self.label}' is decreasing near t = {t:.6g}.")
            if self.deriv2(t) < -_SHAPE_TOL * max(1.0, abs(self.deriv(t))):
                raise InvalidConfig(f"Congestion function '{self.label}' is not convex near t = {t:.6g}.")
        if self.func(domain_max) <= self.func(0.0):
            raise InvalidConfig(f"Congestion function '{self.label}' is not strictly increasing on [0, {domain_max:g}].")

    @classmethod
    def linear(cls) -> "CongestionFn":
        """g(t) = t."""
        return cls(
            func=lambda t: t,
            deriv_func=lambda t: 1.0,
            deriv2_func=lambda t: 0.0,
            kind=CongestionKind.LINEAR,
            label="linear",
        )

    @classmethod
    def power(cls, exponent: float) -> "CongestionFn":
        """g(t) = t ** exponent for exponent >= 1."""
        if not exponent >= 1.0:
            raise InvalidConfig(f"Power congestion needs exponent >= 1 to stay convex, got {exponent}.", field="exponent")
        if exponent == 1.0:
            return cls.linear()

        def second(t: float) -> float:
            if t == 0.0 and exponent < 2.0:
                return math.inf
            return exponent * (exponent - 1.0) * t ** (exponent - 2.0)

        return cls(
            func=lambda t: t ** exponent,
            deriv_func=lambda t: exponent * t ** (exponent - 1.0),
            deriv2_func=second,
            kind=CongestionKind.CUSTOM,
            label=f"power({exponent:g})",
        )

    @classmethod
    def custom(
        cls,
        func: ScalarFn,
        deriv: Optional[ScalarFn] = None,
        deriv2: Optional[ScalarFn] = None,
        label: str = "custom",
    ) -> "CongestionFn":
        return cls(func=func, deriv_func=deriv, deriv2_func=deriv2, kind=CongestionKind.CUSTOM, label=label)


@dataclass(frozen=True)
class DemandCurve:
    """
    Inverse demand P(q): willingness to pay of the marginal customer at mass q.

    ``q_max`` is the right end of the relevant domain: P^-1(0) for linear and
    custom curves, the market size A for homogeneous demand.
    """
    func: ScalarFn
    q_max: float
    deriv_func: Optional[ScalarFn] = None
    deriv2_func: Optional[ScalarFn] = None
    kind: DemandKind = DemandKind.CUSTOM
    market_size: Optional[float] = None
    valuation: Optional[float] = None
    label: str = "custom"

    def __call__(self, q: float) -> float:
        return self.func(q)

    def deriv(self, q: float) -> float:
        if self.deriv_func is not None:
            return self.deriv_func(q)
        return derivative(self.func, q)

    def deriv2(self, q: float) -> float:
        if self.deriv2_func is not None:
            return self.deriv2_func(q)
        return second_derivative(self.func, q)

    @property
    def p0(self) -> float:
        """Highest willingness to pay, P(0)."""
        return self.func(0.0)

    @property
    def is_linear(self) -> bool:
        return self.kind is DemandKind.LINEAR

    @property
    def is_homogeneous(self) -> bool:
        return self.kind is DemandKind.HOMOGENEOUS

    def inverse(self, price: float) -> float:
        """
        Mass q in [0, q_max] at which P(q) = price.

        For homogeneous demand every customer buys below the valuation, so the
        whole market A is returned for price < T and 0 otherwise.
        """
        if price >= self.p0:
            return 0.0
        if self.kind is DemandKind.LINEAR:
            return min(1.0 - price, self.q_max)
        if self.kind is DemandKind.HOMOGENEOUS:
            return self.market_size
        if price <= self.func(self.q_max):
            return self.q_max
        return float(optimize.brentq(lambda q: self.func(q) - price, 0.0, self.q_max, xtol=1e-15))

    def validate(self, points: int = 128) -> None:
        """
        Check that P is non-increasing and concave on a sample grid over [0, q_max].

        Homogeneous demand is a step by construction and is not sampled.
        """
        if self.kind is DemandKind.HOMOGENEOUS:
            return
        grid = sample_grid(self.q_max, points)
        values = np.array([self.func(q) for q in grid])
        if np.any(np.diff(values) > _SHAPE_TOL):
            raise InvalidConfig(f"Demand curve '{self.label}' is increasing somewhere on [0, {self.q_max:g}].")
        for q in grid:
            if self.deriv2(q) > _SHAPE_TOL * max(1.0, abs(self.deriv(q))):
                raise InvalidConfig(f"Demand curve '{self.label}' is not concave near q = {q:.6g}.")

    @classmethod
    def linear(cls) -> "DemandCurve":
        """P(q) = 1 - q."""
        return cls(
            func=lambda q: 1.0 - q,
            q_max=1.0,
            deriv_func=lambda q: -1.0,
            deriv2_func=lambda q: 0.0,
            kind=DemandKind.LINEAR,
            label="linear",
        )

    @classmethod
    def homogeneous(cls, market_size: float, valuation: float) -> "DemandCurve":
        """P(q) = T for q <= A, else 0: A customers who all value service at T."""
        if not market_size > 0:
            raise InvalidConfig(f"Market size A must be positive, got {market_size}.", field="market_size")
        if not valuation > 0:
            raise InvalidConfig(f"Valuation T must be positive, got {valuation}.", field="valuation")
        return cls(
            func=lambda q: valuation if q <= market_size else 0.0,
            q_max=market_size,
            deriv_func=lambda q: 0.0,
            deriv2_func=lambda q: 0.0,
            kind=DemandKind.HOMOGENEOUS,
            market_size=market_size,
            valuation=valuation,
            label=f"homogeneous(A={market_size:g}, T={valuation:g})",
        )

    @classmethod
    def custom(
        cls,
        func: ScalarFn,
        q_max: float,
        deriv: Optional[ScalarFn] = None,
        deriv2: Optional[ScalarFn] = None,
        label: str = "custom",
    ) -> "DemandCurve":
        if not q_max > 0:
            raise InvalidConfig(f"Custom demand needs a positive domain bound q_max, got {q_max}.")
        return cls(func=func, q_max=q_max, deriv_func=deriv, deriv2_func=deriv2, kind=DemandKind.CUSTOM, label=label)
