"""
Small numerical building blocks shared by the solvers.

Golden-section maximization, bracketed bisection, inversion of increasing
functions and finite-difference derivatives.
"""

import logging
import math
from typing import Callable

import numpy as np
from scipy import optimize

from .errors import SolverNoConverge

_logger = logging.getLogger(__name__)

INV_PHI = (math.sqrt(5.0) - 1.0) / 2.0  # 1/phi
INV_PHI_SQ = (3.0 - math.sqrt(5.0)) / 2.0  # 1/phi^2

GOLDEN_TOL = 1e-10
GOLDEN_MAX_ITER = 200
SAMPLE_POINTS = 128


def golden_section_max(
    func: Callable[[float], float],
    lo: float,
    hi: float,
    tol: float = GOLDEN_TOL,
    max_iter: int = GOLDEN_MAX_ITER,
) -> tuple[float, float]:
    """
    Maximize a unimodal function on [lo, hi] by golden-section search.

    Args:
        func: Objective, assumed unimodal (concave objectives always are)
        lo: Left end of the bracket
        hi: Right end of the bracket
        tol: Absolute tolerance on the argument
        max_iter: Iteration cap

    Returns:
        Tuple (argmax, max value). The bracket end points are compared too, so a
        boundary maximum is returned exactly. An interior argmax is only located to
        about sqrt(machine eps) relative to the bracket, since the search
        compares function values; the max value is accurate to rounding.

    Raises:
        SolverNoConverge: If the bracket is still wider than tol after max_iter
            iterations.
    """
    if hi < lo:
        lo, hi = hi, lo
    dist = hi - lo
    if dist <= tol:
        x = 0.5 * (lo + hi)
        return x, func(x)

    a, b = lo, hi
    c = a + INV_PHI_SQ * dist
    d = a + INV_PHI * dist
    yc = func(c)
    yd = func(d)

    iterations = 0
    while b - a > tol:
        if iterations >= max_iter:
            raise SolverNoConverge(
                f"Golden-section search did not reach tolerance {tol:g} on "
                f"[{lo:g}, {hi:g}] within {max_iter} iterations."
            )
        if yc > yd:
            b, d, yd = d, c, yc
            c = a + INV_PHI_SQ * (b - a)
            yc = func(c)
        else:
            a, c, yc = c, d, yd
            d = a + INV_PHI * (b - a)
            yd = func(d)
        iterations += 1

    x = 0.5 * (a + b)
    best_x, best_y = x, func(x)
    for edge in (lo, hi):
        y_edge = func(edge)
        if y_edge > best_y:
            best_x, best_y = edge, y_edge
    return best_x, best_y


def bisect_root(
    func: Callable[[float], float],
    lo: float,
    hi: float,
    xtol: float,
    max_iter: int = 200,
) -> float:
    """
    Root of a function that changes sign on [lo, hi], by bisection.

    Raises:
        SolverNoConverge: If scipy reports that bisection did not converge, or
            rejects the bracket (no sign change, non-finite values).
    """
    try:
        root, result = optimize.bisect(
            func, lo, hi, xtol=xtol, maxiter=max_iter, full_output=True, disp=False
        )
    except ValueError as exc:
        raise SolverNoConverge(f"Bisection on [{lo:g}, {hi:g}] failed: {exc}") from exc
    if not result.converged:
        raise SolverNoConverge(
            f"Bisection on [{lo:g}, {hi:g}] did not converge within {max_iter} "
            f"iterations (flag: {result.flag})."
        )
    return float(root)


def invert_increasing(
    func: Callable[[float], float],
    level: float,
    hi: float = 1.0,
    max_hi: float = 1e12,
) -> float:
    """
    Smallest t >= 0 with func(t) = level for a nondecreasing func.

    Returns 0 when level <= func(0). The upper bracket is doubled until it
    covers the level.
    """
    base = func(0.0)
    if level <= base:
        return 0.0
    while func(hi) < level:
        hi *= 2.0
        if hi > max_hi:
            raise SolverNoConverge(
                f"Could not bracket the level {level:g}; function stays below it "
                f"up to {max_hi:g}."
            )
    try:
        return float(optimize.brentq(lambda t: func(t) - level, 0.0, hi, xtol=1e-14))
    except (ValueError, RuntimeError) as exc:
        raise SolverNoConverge(f"Could not invert at level {level:g} on [0, {hi:g}]: {exc}") from exc


def derivative(func: Callable[[float], float], x: float, rel_step: float = 1e-6) -> float:
    """Central finite difference; one-sided at the left edge of [0, inf)."""
    h = rel_step * max(1.0, abs(x))
    if x - h < 0.0:
        return (func(x + h) - func(x)) / h
    return (func(x + h) - func(x - h)) / (2.0 * h)


def second_derivative(func: Callable[[float], float], x: float, rel_step: float = 1e-4) -> float:
    """Central second difference; shifted right near 0."""
    h = rel_step * max(1.0, abs(x))
    center = max(x, h)
    return (func(center + h) - 2.0 * func(center) + func(center - h)) / (h * h)


def sample_grid(domain_max: float, points: int = SAMPLE_POINTS) -> np.ndarray:
    """Evenly spaced sample points on [0, domain_max]."""
    return np.linspace(0.0, domain_max, points)


def count_sign_changes(values: np.ndarray, tol: float = 0.0) -> int:
    """Number of sign changes in a sequence, ignoring entries within tol of zero."""
    signs = np.sign(np.where(np.abs(values) <= tol, 0.0, values))
    signs = signs[signs != 0]
    if signs.size < 2:
        return 0
    return int(np.count_nonzero(np.diff(signs)))
