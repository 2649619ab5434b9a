"""
Scenario files for the command-line tool.

A scenario is a TOML document with three sections:

- [market]: B, W (number or "inf"), alpha, beta, gamma, n_entrants, regime, lteu
- [functions]: demand (linear | homogeneous), market_size, valuation,
  congestion (linear | power), exponent
- [run]: command settings (sweep grid, threshold query, output path, ...)

Unknown sections or keys are rejected. Every error names the file, the line
and the key it concerns.
"""

import logging
import math
import re
import sys
from dataclasses import dataclass, field, fields
from pathlib import Path
from typing import Any, Optional

if sys.version_info >= (3, 11):
    import tomllib
else:  # pragma: no cover
    import tomli as tomllib

import numpy as np

from .analysis.sweeps import SweepParameter
from .analysis.thresholds import Metric, SearchParameter, ThresholdQuery
from .errors import InvalidConfig, ScenarioParseError
from .model.config import DEFAULT_ENTRANTS, EntrantRegime, MarketConfig
from .model.functions import CongestionFn, DemandCurve

_logger = logging.getLogger(__name__)

_SECTION_RE = re.compile(r"^\s*\[\s*([A-Za-z0-9_.-]+)\s*\]")
_DECODE_LINE_RE = re.compile(r"line (\d+)")


@dataclass
class MarketSection:
    """State of the [market] table."""
    B: float = 1.0
    W: Any = 1.0
    alpha: float = 0.0
    beta: float = 0.0
    gamma: float = 1.0
    n_entrants: Optional[int] = None
    regime: str = EntrantRegime.MULTI.value
    lteu: bool = True


@dataclass
class FunctionsSection:
    """State of the [functions] table."""
    demand: str = "linear"
    market_size: float = 1.0
    valuation: float = 1.0
    congestion: str = "linear"
    exponent: float = 2.0


@dataclass
class RunSection:
    """State of the [run] table."""
    parameter: Optional[str] = None
    grid: Optional[list] = None
    start: Optional[float] = None
    stop: Optional[float] = None
    num: Optional[int] = None
    threads: int = 1
    output: Optional[str] = None
    metric: Optional[str] = None
    bracket: Optional[list] = None
    grid_size: int = 2000
    eps: float = 1e-4
    utilization: Optional[float] = None


_SECTIONS = {"market": MarketSection, "functions": FunctionsSection, "run": RunSection}
_REQUIRED_MARKET_KEYS = ("B", "W")

_NUMBER_KEYS = {"B", "alpha", "beta", "gamma", "market_size", "valuation", "exponent",
                "start", "stop", "eps", "utilization"}
_INT_KEYS = {"n_entrants", "num", "threads", "grid_size"}
_STRING_KEYS = {"regime", "demand", "congestion", "parameter", "output", "metric"}


def _is_number(value: Any) -> bool:
    return isinstance(value, (int, float)) and not isinstance(value, bool)


def _is_number_or_inf(value: Any) -> bool:
    return _is_number(value) or value == "inf"


def _as_float(value: Any) -> float:
    return math.inf if value == "inf" else float(value)


@dataclass
class Scenario:
    """Parsed scenario file."""
    path: Path
    market: MarketSection = field(default_factory=MarketSection)
    functions: FunctionsSection = field(default_factory=FunctionsSection)
    run: RunSection = field(default_factory=RunSection)
    text: str = field(default="", repr=False)

    @classmethod
    def load_from_file(cls, path: Path) -> "Scenario":
        """
        Read and type-check a scenario file.

        Raises:
            ScenarioParseError: On unreadable files, TOML syntax errors, unknown
                sections or keys, and values of the wrong type.
        """
        path = Path(path)
        try:
            text = path.read_text(encoding="utf-8")
        except OSError as exc:
            raise ScenarioParseError(path, f"cannot read scenario file ({exc.strerror or exc}).") from None
        try:
            data = tomllib.loads(text)
        except tomllib.TOMLDecodeError as exc:
            match = _DECODE_LINE_RE.search(str(exc))
            line = int(match.group(1)) if match else None
            raise ScenarioParseError(path, f"invalid TOML: {exc}", line=line) from None

        scenario = cls(path=path, text=text)
        for section_name, table in data.items():
            if section_name not in _SECTIONS:
                raise ScenarioParseError(
                    path, f"unknown section; expected one of {', '.join(_SECTIONS)}.",
                    line=scenario.line_of(section_name, header=True), key=section_name,
                )
            if not isinstance(table, dict):
                raise ScenarioParseError(path, "expected a table.", line=scenario.line_of(section_name), key=section_name)
            scenario._fill(section_name, table)

        if "market" not in data:
            raise ScenarioParseError(path, "missing [market] section.", key="market")
        for key in _REQUIRED_MARKET_KEYS:
            if key not in data["market"]:
                raise ScenarioParseError(
                    path, "required key is missing.", line=scenario.line_of("market", header=True), key=key
                )
        _logger.debug("Loaded scenario %s", path)
        return scenario

    def line_of(self, key: str, section: Optional[str] = None, header: bool = False) -> Optional[int]:
        """1-based line where a key (or a section header) appears, searching within ``section`` if given."""
        key_re = re.compile(rf"^\s*(?:{re.escape(key)}|\"{re.escape(key)}\")\s*=")
        current = None
        for number, line in enumerate(self.text.splitlines(), start=1):
            header_match = _SECTION_RE.match(line)
            if header_match:
                current = header_match.group(1)
                if header and current == key:
                    return number
                continue
            if not header and (section is None or current == section) and key_re.match(line):
                return number
        return None

    def error(self, reason: str, key: str, section: Optional[str] = None) -> ScenarioParseError:
        return ScenarioParseError(self.path, reason, line=self.line_of(key, section), key=key)

    def _fill(self, section_name: str, table: dict) -> None:
        state = getattr(self, section_name)
        known = {f.name for f in fields(state)}
        for key, value in table.items():
            if key not in known:
                raise self.error(f"unknown key in [{section_name}]; expected one of {', '.join(sorted(known))}.",
                                 key, section_name)
            self._check_type(section_name, key, value)
            setattr(state, key, value)

    def _check_type(self, section: str, key: str, value: Any) -> None:
        ok = True
        expected = ""
        if key == "W":
            ok, expected = _is_number_or_inf(value), 'a number or "inf"'
        elif key in _NUMBER_KEYS:
            ok, expected = _is_number(value), "a number"
        elif key in _INT_KEYS:
            ok, expected = isinstance(value, int) and not isinstance(value, bool), "an integer"
        elif key in _STRING_KEYS:
            ok, expected = isinstance(value, str), "a string"
        elif key == "lteu":
            ok, expected = isinstance(value, bool), "true or false"
        elif key == "grid":
            ok = isinstance(value, list) and all(_is_number_or_inf(v) for v in value)
            expected = "a list of numbers"
        elif key == "bracket":
            ok = isinstance(value, list) and len(value) == 2 and all(_is_number(v) for v in value)
            expected = "a list of two numbers"
        if not ok:
            raise self.error(f"expected {expected}, got {value!r}.", key, section)

    def market_config(self) -> MarketConfig:
        """
        Build the MarketConfig of the [market] section.

        Raises:
            ScenarioParseError: If a value is out of range, anchored at its key.
        """
        m = self.market
        try:
            regime = EntrantRegime(m.regime)
        except ValueError:
            choices = ", ".join(r.value for r in EntrantRegime)
            raise self.error(f"unknown regime '{m.regime}'; expected one of {choices}.", "regime", "market") from None
        n_entrants = m.n_entrants if m.n_entrants is not None else DEFAULT_ENTRANTS[regime]
        try:
            return MarketConfig(
                B=float(m.B), W=_as_float(m.W), alpha=float(m.alpha), beta=float(m.beta), gamma=float(m.gamma),
                n_entrants=n_entrants, lteu_enabled=m.lteu, regime=regime,
            )
        except InvalidConfig as exc:
            raise self.error(str(exc), exc.field or "market", "market") from None

    def build_functions(self) -> tuple[CongestionFn, DemandCurve]:
        """Congestion function and demand curve of the [functions] section."""
        f = self.functions
        try:
            if f.congestion == "linear":
                g = CongestionFn.linear()
            elif f.congestion == "power":
                g = CongestionFn.power(float(f.exponent))
            else:
                raise self.error(f"unknown congestion '{f.congestion}'; expected linear or power.",
                                 "congestion", "functions")
            if f.demand == "linear":
                P = DemandCurve.linear()
            elif f.demand == "homogeneous":
                P = DemandCurve.homogeneous(float(f.market_size), float(f.valuation))
            else:
                raise self.error(f"unknown demand '{f.demand}'; expected linear or homogeneous.",
                                 "demand", "functions")
        except InvalidConfig as exc:
            raise self.error(str(exc), exc.field or "functions", "functions") from None
        return g, P

    def sweep_parameter(self) -> SweepParameter:
        try:
            return SweepParameter(self.run.parameter)
        except ValueError:
            choices = ", ".join(p.value for p in SweepParameter)
            raise self.error(f"sweep parameter must be one of {choices}, got {self.run.parameter!r}.",
                             "parameter", "run") from None

    def sweep_grid(self) -> np.ndarray:
        """Grid from ``grid`` or from ``start``/``stop``/``num``."""
        r = self.run
        if r.grid is not None:
            return np.array([_as_float(v) for v in r.grid], dtype=float)
        if r.start is not None and r.stop is not None and r.num is not None:
            if r.num < 0:
                raise self.error(f"num must be non-negative, got {r.num}.", "num", "run")
            return np.linspace(float(r.start), float(r.stop), r.num)
        raise self.error("a sweep needs either grid or start, stop and num.", "grid", "run")

    def threshold_query(self, cfg: MarketConfig) -> ThresholdQuery:
        """ThresholdQuery from ``metric``, ``parameter`` and ``bracket``."""
        r = self.run
        for key in ("metric", "parameter", "bracket"):
            if getattr(r, key) is None:
                raise self.error("required for the threshold command.", key, "run")
        try:
            metric = Metric(r.metric)
        except ValueError:
            choices = ", ".join(m.value for m in Metric)
            raise self.error(f"metric must be one of {choices}.", "metric", "run") from None
        try:
            parameter = SearchParameter(r.parameter)
        except ValueError:
            choices = ", ".join(p.value for p in SearchParameter)
            raise self.error(f"threshold parameter must be one of {choices}.", "parameter", "run") from None
        try:
            return ThresholdQuery(metric, parameter, (float(r.bracket[0]), float(r.bracket[1])), cfg)
        except InvalidConfig as exc:
            raise self.error(str(exc), "bracket", "run") from None
