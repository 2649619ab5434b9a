"""
Exception types raised by the market model, the solvers and the CLI.

All library errors derive from MarketError so callers can catch the whole
family in one place (the CLI maps them to exit codes).
"""

from pathlib import Path
from typing import Optional


class MarketError(RuntimeError):
    """Base class for every error raised by lteu_market."""


class InvalidConfig(MarketError, ValueError):
    """A market parameter or function argument is outside its valid range."""

    def __init__(self, message: str, field: Optional[str] = None):
        super().__init__(message)
        self.field = field


class DegenerateDenominator(MarketError):
    """An equivalent-bandwidth or congestion formula divides by (near) zero."""


class SolverNoConverge(MarketError):
    """An iterative solver exhausted its iteration budget before its tolerance."""


class UnsupportedFunctions(MarketError):
    """The requested regime has no solver for the given congestion/demand kinds."""


class NoSignChange(MarketError):
    """A threshold bracket does not contain a sign change of the metric difference."""

    def __init__(self, message: str, diff_lo: float, diff_hi: float):
        super().__init__(message)
        self.diff_lo = diff_lo
        self.diff_hi = diff_hi


class ScenarioParseError(MarketError):
    """
    A scenario file could not be turned into a valid configuration.

    The message is anchored as ``file:line: key: reason`` so editors can jump
    to the offending entry.
    """

    def __init__(
        self,
        path: Path,
        reason: str,
        line: Optional[int] = None,
        key: Optional[str] = None,
    ):
        self.path = Path(path)
        self.reason = reason
        self.line = line
        self.key = key
        location = f"{self.path}:{line if line is not None else '?'}"
        if key:
            location += f": {key}"
        super().__init__(f"{location}: {reason}")
