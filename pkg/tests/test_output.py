import io

import numpy as np
import pandas as pd
import pytest

from conftest import licensed, monopoly, multi
from lteu_market.analysis import run_figure, sweep, welfare_report
from lteu_market.solver_interface import solve_equilibrium
from lteu_market.output import CSV_COLUMNS, format_threshold, stem_path, sweep_to_csv, write_sweep_csv
from lteu_market.analysis import Metric, SearchParameter, ThresholdQuery, ThresholdResult


def test_csv_layout(g, P):
    text = sweep_to_csv(sweep(multi(), "W", [1.0, 2.0], g, P))
    lines = text.split("\n")
    assert lines[0] == ",".join(CSV_COLUMNS)
    assert lines[-1] == ""
    assert len(lines) == 6
    assert lines[2].startswith("W,1,1,0.3,")
    assert "\r" not in text


def test_failed_rows_are_written_as_nan(g, P):
    text = sweep_to_csv(sweep(multi(alpha=0.0), "beta", [0.5, 1.0], g, P))
    failed = text.split("\n")[4]
    assert failed.startswith("beta,1,1,nan,")
    assert failed.count("nan") == len(CSV_COLUMNS) - 3


def test_csv_is_deterministic_across_runs_and_threads(g, P, tmp_path):
    grid = np.linspace(0.01, 10.0, 50)
    texts = {sweep_to_csv(sweep(multi(), "W", grid, g, P, threads=t)) for t in (1, 1, 1, 4, 8)}
    assert len(texts) == 1

    paths = []
    for i, threads in enumerate((1, 4)):
        (label, result), = run_figure("multi_small_b", threads=threads)
        path = tmp_path / f"multi_small_b_{i}.csv"
        write_sweep_csv(result, path)
        paths.append(path)
    assert paths[0].read_bytes() == paths[1].read_bytes()


def test_write_to_stream(g, P):
    buffer = io.StringIO()
    write_sweep_csv(sweep(multi(), "W", [1.0], g, P), buffer)
    assert buffer.getvalue().startswith("parameter,value,lteu,")


def test_stem_path(tmp_path):
    assert stem_path(tmp_path / "multi_alpha.csv", "multi_alpha", "beta0.2_W0.1") == tmp_path / "multi_alpha_beta0.2_W0.1.csv"
    assert stem_path(None, "licensed_b", "alpha0.2").name == "licensed_b_alpha0.2.csv"


def test_format_threshold_without_crossing():
    query = ThresholdQuery(Metric.TOTAL_MASS, SearchParameter.GAMMA, (1.0, 1.1), multi())
    text = format_threshold(query, ThresholdResult("no_sign_change", diff_lo=-0.5, diff_hi=-0.25))
    assert "no crossing for gamma in [1, 1.1]" in text
    assert "diff_lo=-0.5 diff_hi=-0.25" in text


@pytest.mark.parametrize("base, parameter, grid", [
    (multi(), "W", [0.3, 1.0, 3.0]),
    (multi(W=2.0), "alpha", [0.1, 0.5, 0.9]),
    (licensed(B=5.0), "W", [0.5, 10.0, 200.0]),
    (monopoly(), "gamma", [1.0, 2.0, 4.0]),
])
def test_csv_rows_match_fresh_solves(g, P, base, parameter, grid):
    frame = pd.read_csv(io.StringIO(sweep_to_csv(sweep(base, parameter, grid, g, P))))
    assert len(frame) == 2 * len(grid)
    for row in frame.itertuples(index=False):
        cfg = base.replace(**{parameter: float(row.value)}).with_lteu(bool(row.lteu))
        outcome = solve_equilibrium(cfg, g, P)
        report = welfare_report(outcome, P)
        expected = {
            "p1": outcome.p_incumbent,
            "x1": outcome.x_incumbent,
            "p_ent": outcome.p_entrant,
            "w_t": outcome.w_total,
            "revenue_inc": outcome.revenue_incumbent,
            "revenue_ent": outcome.revenue_entrants_total,
            "cs": report.consumer_surplus,
            "sw": report.social_welfare,
            "delivered_price": outcome.delivered_price,
        }
        for column, value in expected.items():
            assert getattr(row, column) == pytest.approx(value, abs=1e-9), column
