import math

import pytest

from lteu_market.model import CongestionFn, DemandCurve, EntrantRegime, MarketConfig


@pytest.fixture
def g():
    return CongestionFn.linear()


@pytest.fixture
def P():
    return DemandCurve.linear()


@pytest.fixture
def quadratic():
    return CongestionFn.power(2.0)


def multi(**kwargs) -> MarketConfig:
    params = dict(B=1.0, W=1.0, alpha=0.5, beta=0.5, regime=EntrantRegime.MULTI, n_entrants=2)
    params.update(kwargs)
    return MarketConfig(**params)


def monopoly(**kwargs) -> MarketConfig:
    params = dict(B=1.0, W=1.0, alpha=0.5, beta=0.5, regime=EntrantRegime.NONE, n_entrants=0)
    params.update(kwargs)
    return MarketConfig(**params)


def licensed(**kwargs) -> MarketConfig:
    params = dict(B=1.0, W=1.0, alpha=0.5, beta=0.5, regime=EntrantRegime.ONE_LICENSED, n_entrants=1)
    params.update(kwargs)
    return MarketConfig(**params)


def unlicensed(**kwargs) -> MarketConfig:
    params = dict(B=1.0, W=1.0, alpha=0.5, beta=0.5, regime=EntrantRegime.ONE_UNLICENSED, n_entrants=1)
    params.update(kwargs)
    return MarketConfig(**params)


def multi_closed_form(b: float, w: float) -> tuple[float, float, float]:
    """(p1, x1, w_t) of the linear multi-entrant equilibrium on bands (b, w)."""
    p1 = 1.0 / (2.0 * (1.0 + w))
    x1 = b / (2.0 * (1.0 + b + w))
    w_t = w * (2.0 + 2.0 * w + b) / (2.0 * (1.0 + w) * (1.0 + b + w))
    return p1, x1, w_t


INF = math.inf
