import math

import numpy as np
import pytest

from lteu_market.errors import SolverNoConverge
from lteu_market.numerics import (
    bisect_root,
    count_sign_changes,
    derivative,
    golden_section_max,
    invert_increasing,
    second_derivative,
)


def test_golden_section_finds_interior_maximum():
    x, fx = golden_section_max(lambda t: -(t - 0.3) ** 2 + 2.0, 0.0, 1.0)
    assert x == pytest.approx(0.3, abs=1e-7)
    assert fx == pytest.approx(2.0, abs=1e-12)


def test_golden_section_returns_boundary_maximum_exactly():
    x, fx = golden_section_max(lambda t: t, 0.0, 1.0)
    assert x == 1.0
    assert fx == 1.0


def test_golden_section_swapped_bracket():
    x, _ = golden_section_max(lambda t: -(t - 0.7) ** 2, 1.0, 0.0)
    assert x == pytest.approx(0.7, abs=1e-7)


def test_golden_section_iteration_cap():
    with pytest.raises(SolverNoConverge):
        golden_section_max(lambda t: -t * t, -1.0, 1.0, tol=1e-12, max_iter=5)


def test_bisect_root():
    root = bisect_root(lambda t: t * t - 2.0, 0.0, 2.0, xtol=1e-12)
    assert root == pytest.approx(math.sqrt(2.0), abs=1e-11)


def test_bisect_root_without_sign_change_raises_solver_error():
    with pytest.raises(SolverNoConverge):
        bisect_root(lambda t: t * t + 1.0, -1.0, 1.0, xtol=1e-12)


def test_invert_increasing_grows_bracket():
    assert invert_increasing(lambda t: t ** 3, 1000.0) == pytest.approx(10.0, abs=1e-9)


def test_invert_increasing_power_law_to_full_precision():
    assert invert_increasing(lambda t: t * t, 2.0) == pytest.approx(math.sqrt(2.0), abs=1e-13)


def test_invert_increasing_below_base_is_zero():
    assert invert_increasing(lambda t: t + 1.0, 0.5) == 0.0


def test_invert_increasing_unbounded_level():
    with pytest.raises(SolverNoConverge):
        invert_increasing(lambda t: 1.0 - math.exp(-t), 2.0)


def test_finite_differences():
    assert derivative(lambda t: t ** 3, 2.0) == pytest.approx(12.0, rel=1e-6)
    assert derivative(lambda t: t * t, 0.0) == pytest.approx(0.0, abs=1e-5)
    assert second_derivative(lambda t: t ** 3, 2.0) == pytest.approx(12.0, rel=1e-4)


def test_count_sign_changes_ignores_near_zero():
    values = np.array([1.0, 0.5, 1e-15, -0.2, -0.1, 0.3])
    assert count_sign_changes(values, tol=1e-12) == 2
    assert count_sign_changes(np.array([1.0, 2.0])) == 0
    assert count_sign_changes(np.array([0.0, 0.0])) == 0
