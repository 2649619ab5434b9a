import pytest

from conftest import licensed, monopoly, multi, unlicensed
from lteu_market.equilibrium import verify_nash
from lteu_market.model import DemandCurve
from lteu_market.solver_interface import solve_equilibrium

CASES = {
    "multi_reference": multi(),
    "multi_off": multi(lteu_enabled=False),
    "multi_large_w": multi(W=10.0, alpha=0.75, beta=0.25),
    "monopoly_on": monopoly(),
    "monopoly_off": monopoly(lteu_enabled=False),
    "licensed_on": licensed(),
    "licensed_off": licensed(lteu_enabled=False),
    "licensed_b5": licensed(B=5.0, W=3.0),
    "unlicensed_on": unlicensed(),
}


@pytest.mark.parametrize("name", sorted(CASES))
def test_solver_outputs_are_equilibria(g, P, name):
    cfg = CASES[name]
    report = verify_nash(solve_equilibrium(cfg, g, P), cfg, g, P, grid_size=2000, eps=1e-4)
    assert report.passed, report.deviations
    assert not report.error


def test_step_demand_equilibrium(g):
    step = DemandCurve.homogeneous(1.0, 1.0)
    cfg = multi(lteu_enabled=False)
    report = verify_nash(solve_equilibrium(cfg, g, step), cfg, g, step)
    assert report.passed, report.deviations


@pytest.mark.parametrize("name", ["multi_reference", "licensed_on", "monopoly_on"])
def test_perturbed_incumbent_price_fails(g, P, name):
    cfg = CASES[name]
    outcome = solve_equilibrium(cfg, g, P)
    perturbed = outcome.with_prices(p_incumbent=outcome.p_incumbent + 0.1)
    report = verify_nash(perturbed, cfg, g, P)
    assert not report.passed
    assert report.max_improvement > 1e-4


def test_perturbed_entrant_price_fails(g, P):
    cfg = licensed()
    outcome = solve_equilibrium(cfg, g, P)
    report = verify_nash(outcome.with_prices(p_entrant=outcome.p_entrant + 0.1), cfg, g, P)
    assert not report.passed
    assert report.deviation("entrant").improvement > 1e-4


def test_deviation_labels(g, P):
    report = verify_nash(solve_equilibrium(monopoly(), g, P), monopoly(), g, P, grid_size=200)
    assert [d.provider for d in report.deviations] == [
        "incumbent_licensed", "incumbent_unlicensed", "incumbent_common",
    ]
    with pytest.raises(KeyError):
        report.deviation("entrant")


def test_grid_too_coarse_is_reported(g, P):
    report = verify_nash(solve_equilibrium(multi(), g, P), multi(), g, P, grid_size=50)
    assert not report.passed
    assert "at least 100" in report.error


@pytest.mark.parametrize("cfg", [multi(), multi(lteu_enabled=False), monopoly()], ids=["multi_on", "multi_off", "monopoly_on"])
def test_quadratic_congestion_equilibria_pass(quadratic, P, cfg):
    report = verify_nash(solve_equilibrium(cfg, quadratic, P), cfg, quadratic, P, grid_size=500, eps=1e-4)
    assert not report.error
    assert report.passed, report.deviations
