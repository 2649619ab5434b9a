"""
Property checks of the equilibria over a grid of markets.

B in {0.5, 1, 2}, W in {0.1, 1, 10}, alpha and beta in {0.25, 0.5, 0.75} unless a
test sets its own grid.
"""

import itertools

import numpy as np
import pytest

from conftest import licensed, monopoly, multi
from lteu_market.analysis import fixed_k_sweep, small_w_slopes, welfare_report
from lteu_market.equilibrium import solve_monopoly, solve_multi_entrant
from lteu_market.model import CongestionFn, gamma_threshold
from lteu_market.solver_interface import get_solver

GRID = list(itertools.product((0.5, 1.0, 2.0), (0.1, 1.0, 10.0), (0.25, 0.5, 0.75), (0.25, 0.5, 0.75)))
IDS = [f"B{B:g}-W{W:g}-a{a:g}-b{b:g}" for B, W, a, b in GRID]

TOL = 1e-10
FD_STEP = 1e-5


def _pair(cfg, g, P):
    pair = get_solver(cfg.regime).solve_pair(cfg, g, P)
    return pair[False], pair[True]


def _metrics(outcome, P):
    report = welfare_report(outcome, P)
    return outcome.revenue_incumbent, report.consumer_surplus, report.social_welfare


@pytest.mark.parametrize("B, W, alpha, beta", GRID, ids=IDS)
def test_monopoly_loses_from_lteu_at_equal_efficiency(g, P, B, W, alpha, beta):
    off, on = _pair(monopoly(B=B, W=W, alpha=alpha, beta=beta), g, P)
    for with_lteu, without in zip(_metrics(on, P), _metrics(off, P)):
        assert with_lteu <= without + TOL


@pytest.mark.parametrize("B, W, alpha, beta", GRID, ids=IDS)
def test_monopoly_gains_above_gamma_threshold(g, P, B, W, alpha, beta):
    cfg = monopoly(B=B, W=W, alpha=alpha, beta=beta)
    off, on = _pair(cfg.replace(gamma=1.01 * gamma_threshold(cfg)), g, P)
    for with_lteu, without in zip(_metrics(on, P), _metrics(off, P)):
        assert with_lteu > without + TOL


@pytest.mark.parametrize("B, W, alpha, beta", GRID, ids=IDS)
def test_multi_entrant_lteu_shifts_customers_to_incumbent(g, P, B, W, alpha, beta):
    off, on = _pair(multi(B=B, W=W, alpha=alpha, beta=beta), g, P)
    assert on.p_incumbent > off.p_incumbent
    assert on.x_incumbent > off.x_incumbent
    assert on.revenue_incumbent > off.revenue_incumbent
    assert on.w_total < off.w_total
    assert on.total_mass < off.total_mass
    assert welfare_report(on, P).consumer_surplus < welfare_report(off, P).consumer_surplus


@pytest.mark.parametrize("B, W, alpha, beta", GRID, ids=IDS)
def test_multi_entrant_consumer_surplus_grows_with_w(g, P, B, W, alpha, beta):
    solver = get_solver("multi")
    cfg = multi(B=B, W=W, alpha=alpha, beta=beta)
    for flag in (False, True):
        here = welfare_report(solver.solve(cfg.with_lteu(flag), g, P), P).consumer_surplus
        wider = welfare_report(solver.solve(cfg.replace(W=W + FD_STEP).with_lteu(flag), g, P), P).consumer_surplus
        assert wider >= here - TOL


@pytest.mark.parametrize("B, W, alpha, beta", GRID, ids=IDS)
def test_multi_entrant_revenue_grows_with_duty_cycle(g, P, B, W, alpha, beta):
    solver = get_solver("multi")
    cfg = multi(B=B, W=W, alpha=alpha, beta=beta)
    here = solver.solve(cfg, g, P).revenue_incumbent
    longer = solver.solve(cfg.replace(alpha=alpha + FD_STEP), g, P).revenue_incumbent
    assert longer >= here - TOL


@pytest.mark.parametrize("B, W, alpha, beta", GRID[::7], ids=IDS[::7])
def test_lteu_flattens_small_w_welfare_loss(g, P, quadratic, B, W, alpha, beta):
    cfg = multi(B=B, W=W, alpha=alpha, beta=beta)
    for congestion in (g, quadratic):
        slopes = small_w_slopes(cfg, congestion, P)
        assert slopes.with_lteu > slopes.without_lteu


LICENSED_BANDS = list(itertools.product((0.1, 1.0, 5.0, 20.0), (0.01, 0.5, 2.0, 50.0)))


@pytest.mark.parametrize("b, w", LICENSED_BANDS, ids=[f"b{b:g}-w{w:g}" for b, w in LICENSED_BANDS])
def test_licensed_revenue_falls_with_unlicensed_band(g, P, b, w):
    solver = get_solver("one_licensed_sharing")
    cfg = licensed(B=b, W=w, lteu_enabled=False)
    here = solver.solve(cfg, g, P).revenue_incumbent
    wider = solver.solve(cfg.replace(W=w * (1.0 + 1e-6)), g, P).revenue_incumbent
    assert wider <= here + 1e-15


AGREEMENT_GRID = list(itertools.product((0.5, 2.0), (0.3, 3.0), (0.25, 0.75), (0.25, 0.75), (1.0, 2.0)))


@pytest.mark.parametrize(
    "B, W, alpha, beta, gamma", AGREEMENT_GRID,
    ids=[f"B{B:g}-W{W:g}-a{a:g}-b{b:g}-g{c:g}" for B, W, a, b, c in AGREEMENT_GRID],
)
def test_numeric_multi_entrant_solve_matches_closed_form(g, P, B, W, alpha, beta, gamma):
    linear_as_custom = CongestionFn.custom(lambda t: t, lambda t: 1.0, lambda t: 0.0)
    cfg = multi(B=B, W=W, alpha=alpha, beta=beta, gamma=gamma)
    closed = solve_multi_entrant(cfg, g, P)
    numeric = solve_multi_entrant(cfg, linear_as_custom, P)
    assert closed.method == "closed_form" and numeric.method == "numeric"
    assert numeric.p_incumbent == pytest.approx(closed.p_incumbent, abs=1e-5)
    assert numeric.x_incumbent == pytest.approx(closed.x_incumbent, abs=1e-5)
    assert numeric.w_total == pytest.approx(closed.w_total, abs=1e-5)
    assert numeric.revenue_incumbent == pytest.approx(closed.revenue_incumbent, abs=1e-8)


@pytest.mark.parametrize("B, W, alpha, beta", GRID[::4], ids=IDS[::4])
def test_monopoly_numeric_solve_matches_closed_form(g, P, B, W, alpha, beta):
    linear_as_custom = CongestionFn.custom(lambda t: t, lambda t: 1.0, lambda t: 0.0)
    cfg = monopoly(B=B, W=W, alpha=alpha, beta=beta)
    closed = solve_monopoly(cfg, g, P)
    numeric = solve_monopoly(cfg, linear_as_custom, P)
    assert numeric.revenue_incumbent == pytest.approx(closed.revenue_incumbent, abs=1e-8)
    assert numeric.total_mass == pytest.approx(closed.total_mass, abs=1e-5)


@pytest.mark.parametrize("B, W, alpha, beta", GRID, ids=IDS)
def test_licensed_welfare_grows_with_spectral_efficiency(g, P, B, W, alpha, beta):
    solver = get_solver("one_licensed_sharing")
    cfg = licensed(B=B, W=W, alpha=alpha, beta=beta)
    for flag in (False, True):
        reports = [
            welfare_report(solver.solve(cfg.replace(gamma=float(gamma)).with_lteu(flag), g, P), P)
            for gamma in np.linspace(1.0, 5.0, 17)
        ]
        cs = [report.consumer_surplus for report in reports]
        sw = [report.social_welfare for report in reports]
        assert all(b >= a - TOL for a, b in zip(cs, cs[1:]))
        assert all(b >= a - TOL for a, b in zip(sw, sw[1:]))


FIXED_K_MARKETS = list(itertools.product((0.5, 1.0, 2.0), (0.2, 1.0, 5.0, 100.0)))


@pytest.mark.parametrize("B, W", FIXED_K_MARKETS, ids=[f"B{B:g}-W{W:g}" for B, W in FIXED_K_MARKETS])
def test_fixed_utilization_consumer_surplus_rises_with_duty_cycle(g, P, B, W):
    result = fixed_k_sweep(multi(B=B, W=W), 0.2, np.linspace(0.21, 1.0, 40), g, P)
    cs = result.column(True, lambda row: row.welfare.consumer_surplus)
    assert np.all(np.diff(cs) > 0)


@pytest.mark.parametrize(
    "B, alpha, beta, gamma",
    [(0.5, 0.5, 0.25, 1.0), (0.5, 0.5, 0.75, 1.0), (0.3, 0.2, 0.5, 2.0), (0.8, 0.1, 0.6, 1.0)],
)
def test_licensed_lteu_gain_below_bandwidth_bound(g, P, B, alpha, beta, gamma):
    assert gamma * B / (1.0 - alpha) < 4.0 / 3.0
    solver = get_solver("one_licensed_sharing")
    for W in np.geomspace(0.01, 1e4, 60):
        pair = solver.solve_pair(licensed(B=B, W=float(W), alpha=alpha, beta=beta, gamma=gamma), g, P)
        assert pair[True].revenue_incumbent > pair[False].revenue_incumbent, f"W={W:g}"
