import math

import pytest

from lteu_market.errors import InvalidConfig
from lteu_market.model import CongestionFn, DemandCurve


def test_linear_congestion_inverse_is_identity(g):
    assert g.is_linear
    assert g.inverse(0.4) == 0.4
    assert g.inverse(-1.0) == 0.0


def test_power_congestion_derivatives_and_inverse(quadratic):
    assert not quadratic.is_linear
    assert quadratic(3.0) == 9.0
    assert quadratic.deriv(3.0) == 6.0
    assert quadratic.deriv2(3.0) == 2.0
    assert quadratic.inverse(4.0) == pytest.approx(2.0, abs=1e-12)


def test_power_exponent_one_is_linear():
    assert CongestionFn.power(1.0).is_linear


def test_power_rejects_concave_exponent():
    with pytest.raises(InvalidConfig) as err:
        CongestionFn.power(0.5)
    assert err.value.field == "exponent"


def test_custom_congestion_uses_finite_differences():
    g = CongestionFn.custom(lambda t: math.exp(t) - 1.0, label="exp")
    assert g.deriv(1.0) == pytest.approx(math.e, rel=1e-6)
    assert g.deriv2(1.0) == pytest.approx(math.e, rel=1e-4)
    g.validate(5.0)


def test_congestion_validation_rejects_offset_and_concavity():
    with pytest.raises(InvalidConfig):
        CongestionFn.custom(lambda t: t + 1.0).validate(1.0)
    with pytest.raises(InvalidConfig):
        CongestionFn.custom(lambda t: math.sqrt(t)).validate(1.0)


def test_linear_demand(P):
    assert P.p0 == 1.0
    assert P.inverse(0.25) == 0.75
    assert P.inverse(1.5) == 0.0
    P.validate()


def test_homogeneous_demand_is_a_step():
    P = DemandCurve.homogeneous(2.0, 3.0)
    assert P.is_homogeneous
    assert P(1.0) == 3.0
    assert P(2.5) == 0.0
    assert P.inverse(1.0) == 2.0
    assert P.inverse(3.0) == 0.0


@pytest.mark.parametrize("A, T, field", [(0.0, 1.0, "market_size"), (1.0, -1.0, "valuation")])
def test_homogeneous_demand_rejects_bad_parameters(A, T, field):
    with pytest.raises(InvalidConfig) as err:
        DemandCurve.homogeneous(A, T)
    assert err.value.field == field


def test_custom_demand_inverse_and_validation():
    P = DemandCurve.custom(lambda q: 1.0 - q * q, q_max=1.0)
    assert P.inverse(0.75) == pytest.approx(0.5, abs=1e-12)
    assert P.inverse(-0.1) == 1.0
    P.validate()
    with pytest.raises(InvalidConfig):
        DemandCurve.custom(lambda q: 1.0 - q, q_max=0.0)


def test_convex_demand_fails_validation():
    with pytest.raises(InvalidConfig):
        DemandCurve.custom(lambda q: (1.0 - q) ** 2, q_max=1.0).validate()
