"""
CSV tables and text summaries for the CLI.

CSV layout: one header row, then one row per (grid value, lteu flag) sorted
by value then flag. Floats carry 12 significant digits; failed rows keep their
value and flag and show nan elsewhere.
"""

import io
import logging
import math
from pathlib import Path
from typing import Optional, TextIO, Union

import pandas as pd

from .analysis.sweeps import SweepResult, SweepRow
from .analysis.thresholds import RevenueGainBoundary, ThresholdQuery, ThresholdResult
from .analysis.welfare import WelfareReport
from .equilibrium.nash import NashReport
from .equilibrium.outcome import EquilibriumOutcome
from .model.bands import EffectiveBands
from .model.config import MarketConfig

_logger = logging.getLogger(__name__)

CSV_COLUMNS = [
    "parameter", "value", "lteu", "p1", "x1", "p_ent", "w_t",
    "revenue_inc", "revenue_ent", "cs", "sw", "delivered_price",
]
FLOAT_FORMAT = "%.12g"
BOUNDARY_COLUMNS = ["B", "w_threshold", "status", "diff_lo", "diff_hi", "b_bound"]


def _row_record(parameter: str, row: SweepRow) -> dict:
    record = {"parameter": parameter, "value": row.value, "lteu": int(row.lteu)}
    if not row.ok:
        record.update({column: math.nan for column in CSV_COLUMNS[3:]})
        return record
    out, welfare = row.outcome, row.welfare
    record.update({
        "p1": out.p_incumbent,
        "x1": out.x_incumbent,
        "p_ent": out.p_entrant,
        "w_t": out.w_total,
        "revenue_inc": out.revenue_incumbent,
        "revenue_ent": out.revenue_entrants_total,
        "cs": welfare.consumer_surplus,
        "sw": welfare.social_welfare,
        "delivered_price": out.delivered_price,
    })
    return record


def sweep_to_frame(result: SweepResult) -> pd.DataFrame:
    """Sweep rows as a DataFrame with the CSV columns, sorted by (value, lteu)."""
    frame = pd.DataFrame([_row_record(result.parameter, row) for row in result.rows], columns=CSV_COLUMNS)
    frame["lteu"] = frame["lteu"].astype(int)
    return frame.sort_values(["value", "lteu"], kind="mergesort").reset_index(drop=True)


def sweep_to_csv(result: SweepResult) -> str:
    """CSV text of a sweep."""
    buffer = io.StringIO()
    sweep_to_frame(result).to_csv(buffer, index=False, float_format=FLOAT_FORMAT, lineterminator="\n", na_rep="nan")
    return buffer.getvalue()


def _write_text(text: str, destination: Union[Path, str, TextIO], rows: int) -> None:
    if hasattr(destination, "write"):
        destination.write(text)
        return
    path = Path(destination)
    path.parent.mkdir(parents=True, exist_ok=True)
    with open(path, "w", encoding="utf-8", newline="\n") as f:
        f.write(text)
    _logger.info("Wrote %d rows to %s", rows, path)


def write_sweep_csv(result: SweepResult, destination: Union[Path, str, TextIO]) -> None:
    """
    Write a sweep as CSV to a path or an open text stream.

    Paths are written as UTF-8 with LF line endings.
    """
    failed = sum(not row.ok for row in result.rows)
    if failed:
        _logger.warning("%d of %d sweep rows failed and are written as nan", failed, len(result.rows))
    _write_text(sweep_to_csv(result), destination, len(result.rows))


def boundary_to_frame(boundary: RevenueGainBoundary) -> pd.DataFrame:
    """One row per B: the W threshold (nan unless found), search status and end-point differences."""
    records = [
        {
            "B": point.B,
            "w_threshold": point.result.value if point.result.found else math.nan,
            "status": point.result.status,
            "diff_lo": point.result.diff_lo,
            "diff_hi": point.result.diff_hi,
            "b_bound": boundary.asymptotic_b_bound,
        }
        for point in boundary.points
    ]
    return pd.DataFrame(records, columns=BOUNDARY_COLUMNS)


def write_boundary_csv(boundary: RevenueGainBoundary, destination: Union[Path, str, TextIO]) -> None:
    buffer = io.StringIO()
    boundary_to_frame(boundary).to_csv(
        buffer, index=False, float_format=FLOAT_FORMAT, lineterminator="\n", na_rep="nan"
    )
    _write_text(buffer.getvalue(), destination, len(boundary.points))


def format_outcome_line(label: str, outcome: EquilibriumOutcome, welfare: WelfareReport) -> str:
    text = (
        f"[{label}] p1={outcome.p_incumbent:.6f} x1={outcome.x_incumbent:.6f} "
        f"p_ent={outcome.p_entrant:.6f} w_t={outcome.w_total:.6f} "
        f"revenue={outcome.revenue_incumbent:.6f} revenue_ent={outcome.revenue_entrants_total:.6f} "
        f"cs={welfare.consumer_surplus:.6f} sw={welfare.social_welfare:.6f} "
        f"delivered_price={outcome.delivered_price:.6f}"
    )
    if outcome.p_licensed is not None:
        text += (
            f" p_licensed={outcome.p_licensed:.6f} x_licensed={outcome.x_licensed:.6f}"
            f" p_unlicensed={outcome.p_unlicensed:.6f} x_unlicensed={outcome.x_unlicensed:.6f}"
        )
    return text


def format_solve_summary(
    cfg: MarketConfig,
    bands: EffectiveBands,
    results: dict[bool, tuple[EquilibriumOutcome, WelfareReport]],
) -> str:
    """Human-readable summary of a solve with LTE-U off and on."""
    w_e = "inf" if bands.asymptotic else f"{bands.w_e:.6f}"
    lines = [
        cfg.describe(),
        f"effective bands: b_e={bands.b_e:.6f} w_e={w_e}",
    ]
    for flag in (False, True):
        outcome, welfare = results[flag]
        lines.append(format_outcome_line("lteu on" if flag else "lteu off", outcome, welfare))
    return "\n".join(lines) + "\n"


def format_threshold(query: ThresholdQuery, result: ThresholdResult) -> str:
    name = query.parameter.value
    if result.found:
        head = f"threshold {query.metric.value}: {name}={result.value:.10g}"
    else:
        head = f"threshold {query.metric.value}: no crossing for {name} in [{query.bracket[0]:g}, {query.bracket[1]:g}]"
    return f"{head}\ndiff_lo={result.diff_lo:.6g} diff_hi={result.diff_hi:.6g}\n"


def format_nash(report: NashReport) -> str:
    lines = [f"nash: {'pass' if report.passed else 'FAIL'} (grid={report.grid_size}, eps={report.eps:g})"]
    if report.error:
        lines.append(f"error: {report.error}")
    for dev in report.deviations:
        lines.append(
            f"  {dev.provider}: baseline={dev.baseline_revenue:.6f} best={dev.best_revenue:.6f} "
            f"at price={dev.best_price:.6f} improvement={dev.improvement:.3g}"
        )
    return "\n".join(lines) + "\n"


def stem_path(out: Optional[Path], default_stem: str, label: str) -> Path:
    """Output path for one curve of a multi-curve preset: ``<stem>_<label>.csv``."""
    base = Path(out) if out is not None else Path(f"{default_stem}.csv")
    return base.with_name(f"{base.stem}_{label}{base.suffix or '.csv'}")
