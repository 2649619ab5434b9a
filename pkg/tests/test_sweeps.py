import math

import numpy as np
import pytest

from conftest import multi
from lteu_market.analysis import (
    FIGURE_PRESETS,
    figure_curves,
    fixed_k_sweep,
    preset_names,
    resolve_preset,
    run_figure,
    run_region,
    sweep,
)
from lteu_market.errors import InvalidConfig
from lteu_market.numerics import count_sign_changes

revenue = lambda row: row.outcome.revenue_incumbent
total_mass = lambda row: row.outcome.total_mass


def test_sweep_rows_follow_grid_and_flags(g, P):
    result = sweep(multi(), "W", [0.5, 1.0, 2.0], g, P)
    assert result.parameter == "W"
    assert [(row.value, row.lteu) for row in result.rows] == [
        (0.5, False), (0.5, True), (1.0, False), (1.0, True), (2.0, False), (2.0, True),
    ]
    assert all(row.ok for row in result.rows)
    assert result.curve(True)[1].outcome.p_incumbent == pytest.approx(0.3, abs=1e-12)


def test_infinite_w_on_the_grid_uses_the_limit(g, P):
    result = sweep(multi(), "W", [1.0, math.inf], g, P)
    assert result.curve(True)[1].outcome.method == "asymptotic"


def test_failed_rows_are_kept(g, P):
    result = sweep(multi(alpha=0.0), "beta", [0.5, 1.0], g, P)
    off, on = result.curve(False)[1], result.curve(True)[1]
    assert off.ok
    assert not on.ok and "DegenerateDenominator" in on.error
    assert math.isnan(result.column(True, revenue)[1])


@pytest.mark.parametrize("grid", [[1.0, 1.0], [2.0, 1.0]])
def test_grid_must_increase(g, P, grid):
    with pytest.raises(InvalidConfig) as err:
        sweep(multi(), "W", grid, g, P)
    assert err.value.field == "grid"


def test_unknown_parameter(g, P):
    with pytest.raises(ValueError):
        sweep(multi(), "delta", [1.0], g, P)


def test_threads_do_not_change_rows(g, P):
    grid = np.linspace(0.01, 10.0, 40)
    serial = sweep(multi(), "W", grid, g, P, threads=1)
    pooled = sweep(multi(), "W", grid, g, P, threads=4)
    assert [(r.value, r.lteu, r.outcome) for r in serial.rows] == [(r.value, r.lteu, r.outcome) for r in pooled.rows]


def test_fixed_utilization_revenue_falls_for_narrow_bands(g, P):
    result = fixed_k_sweep(multi(), 0.2, np.linspace(0.205, 1.0, 60), g, P)
    curve = result.column(True, revenue)
    assert np.all(np.diff(curve) < 0)
    for row in result.curve(True):
        assert row.outcome.lteu_enabled


def test_fixed_utilization_revenue_rises_towards_full_duty_cycle_for_wide_bands(g, P):
    # beta close to k: the incumbent gains from trading share for duty cycle
    result = fixed_k_sweep(multi(W=100.0), 0.2, np.linspace(0.9, 1.0, 11), g, P)
    assert np.all(np.diff(result.column(True, revenue)) > 0)


def test_fixed_utilization_validation(g, P):
    with pytest.raises(InvalidConfig):
        fixed_k_sweep(multi(), 0.2, [0.2, 0.5], g, P)
    with pytest.raises(InvalidConfig):
        fixed_k_sweep(multi(), 1.5, [0.5], g, P)
    with pytest.raises(InvalidConfig):
        fixed_k_sweep(multi(regime="none", n_entrants=0), 0.2, [0.5], g, P)


def test_figure_presets_are_listed():
    assert {"fig2", "fig3a", "fig3b", "fig4", "fig5a", "fig5b", "fig6", "fig7", "fig8", "multi_w"} <= set(FIGURE_PRESETS)
    assert "fig1" in preset_names()
    assert resolve_preset("fixed_k_pair") == "fig8"
    assert resolve_preset("fig8") == "fig8"
    assert [spec.label for spec in figure_curves("fig8")] == ["W0.2", "W5"]
    assert [spec.label for spec in figure_curves("fixed_k_pair")] == ["W0.2", "W5"]
    with pytest.raises(InvalidConfig):
        figure_curves("no_such_preset")


def test_duty_cycle_preset_peaks_at_quarter():
    (label, result), = run_figure("fig2")
    assert label == ""
    values = np.array(result.values)
    curve = result.column(True, revenue)
    assert values[int(np.argmax(curve))] == pytest.approx(0.25, abs=1e-3)
    assert curve.max() == pytest.approx(1.0 / 48.0, abs=1e-9)


def test_spectral_efficiency_preset_has_one_mass_crossing():
    (_, result), = run_figure("fig4")
    diff = result.column(True, total_mass) - result.column(False, total_mass)
    assert diff[0] > 0
    assert diff[-1] < 0
    assert count_sign_changes(diff) == 1


def test_licensed_presets_split_revenue_and_welfare_ranges():
    (_, revenue_view), = run_figure("fig5a")
    diff = revenue_view.column(True, revenue) - revenue_view.column(False, revenue)
    assert count_sign_changes(diff) == 1
    welfare_grid = figure_curves("fig5b")[0].grid
    assert welfare_grid[-1] > revenue_view.values[-1]


def test_revenue_gain_region_respects_licensed_bound():
    boundary = run_region("fig1")
    bound = boundary.asymptotic_b_bound
    assert bound == pytest.approx(2.0 / 3.0, abs=1e-15)
    assert len(boundary.points) == 50
    for point in boundary.points:
        if point.B < bound:
            # gamma * B / (1 - alpha) < 4/3: LTE-U gains at every W in the bracket
            assert point.result.status == "no_sign_change"
            assert point.result.diff_lo > 0 and point.result.diff_hi > 0
        else:
            assert point.result.status in ("found", "no_sign_change")
    found = [point for point in boundary.points if point.result.found]
    assert found and all(point.B > bound for point in found)
    assert all(point.result.found for point in boundary.points if point.B >= 1.0)


def test_region_preset_is_not_a_curve_preset():
    with pytest.raises(InvalidConfig):
        figure_curves("fig1")
    with pytest.raises(InvalidConfig):
        run_region("fig2")
