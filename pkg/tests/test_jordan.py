import math

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from conftest import nonzero_vectors
from weakjordan.bv import ScalarTrace, total_variation
from weakjordan.cone import build_cone, sample_member
from weakjordan.jordan import (
    annihilated_direction,
    decompose,
    degenerate_construction,
    verify_increasing_identity,
)
from weakjordan.validation import DomainError, lp_norm
from weakjordan.weakrel import SampledCurve, weakly_related

GRID = [0.0, 1.0, 2.0]


def test_worked_example():
    f = SampledCurve(GRID, [[0, 5], [2, 5], [1, 5]])
    r = decompose(f, [1, 0], 2.0)
    assert r.scalar_trace.values.tolist() == [0, 2, 1]
    assert r.variation.values.tolist() == [0, 2, 3]
    assert r.f1.values.tolist() == [[0, 0], [2, 0], [3, 0]]
    assert r.f2.values.tolist() == [[0, 0], [0, 0], [2, 0]]
    assert r.residual == 0.0
    assert r.f1_increasing and r.f2_increasing and r.verified


def test_constant_curve():
    x0 = np.array([1.0, 2.0])
    r = decompose(SampledCurve(GRID, np.tile([3.0, -1.0], (3, 1))), x0, 2.0)
    g0 = 3.0 - 2.0
    assert np.allclose(r.f1.values, np.tile(g0 * x0 / 5.0, (3, 1)))
    assert np.all(r.f2.values == 0) and np.all(r.variation.values == 0)
    assert r.residual == 0.0


def test_linear_along_base():
    x0 = np.array([3.0, 4.0])
    t = np.array(GRID)
    r = decompose(SampledCurve(GRID, np.outer(t, x0)), x0, 2.0)
    assert r.scalar_trace.values.tolist() == (25 * t).tolist()
    assert np.allclose(r.f1.values, np.outer(t, x0))
    assert np.all(r.f2.values == 0)


def test_accepts_plain_arrays_and_checks_domain():
    r = decompose([[0, 5], [2, 5], [1, 5]], [1, 0])
    assert r.verified
    with pytest.raises(DomainError):
        decompose([[0, 5], [2, 5]], [0, 0])
    with pytest.raises(DomainError):
        decompose([[0, 5], [2, 5]], [1, 0], alpha=2.0)


@st.composite
def wbv_problems(draw):
    dim = draw(st.integers(1, 6))
    nodes = draw(st.integers(2, 40))
    seed = draw(st.integers(0, 2**32 - 1))
    p = draw(st.sampled_from([1.0, 2.0, math.inf, 3.0]))
    rng = np.random.default_rng(seed)
    values = np.cumsum(rng.normal(size=(nodes, dim)), axis=0)
    grid = np.cumsum(rng.uniform(0.1, 1.0, size=nodes))
    x0 = rng.uniform(-5, 5, size=dim)
    x0[np.argmax(np.abs(x0))] += 1.0
    alpha = None if draw(st.booleans()) else draw(st.floats(0.05, 1.0)) * lp_norm(x0, p)
    return SampledCurve(grid, values), x0, p, alpha


@given(wbv_problems())
def test_decomposition_postconditions(problem):
    f, x0, p, alpha = problem
    r = decompose(f, x0, p, alpha)
    g = r.scalar_trace.values
    assert r.residual <= 1e-8 * (1 + np.max(np.abs(g)))
    assert r.f1_increasing and r.f2_increasing
    assert r.variation.values[-1] == total_variation(r.scalar_trace)
    assert r.wbv_ok
    assert weakly_related(f, r.f1 - r.f2, r.functional)


def test_increasing_identity_examples():
    x0 = np.array([1.0, 2.0])
    t = np.array(GRID)
    assert verify_increasing_identity(SampledCurve(GRID, np.outer(t, x0)), x0).passed
    v = verify_increasing_identity(SampledCurve(GRID, np.outer(t, [1.0, 0.0])), [1.0, 0.0])
    assert v.passed and v.checks["related_unit_base"]
    with pytest.raises(ValueError):
        verify_increasing_identity(SampledCurve(GRID, np.outer(-t, x0)), x0)


@given(nonzero_vectors(max_dim=5), st.sampled_from([1.0, 2.0, math.inf]), st.integers(0, 2**32 - 1))
def test_increasing_identity_random(x0, p, seed):
    rng = np.random.default_rng(seed)
    cone = build_cone(x0, p)
    steps = np.array([sample_member(cone, rng) for _ in range(6)])
    f = SampledCurve(np.arange(7.0), np.vstack([np.zeros(x0.size), np.cumsum(steps, axis=0)]))
    assert verify_increasing_identity(f, x0, p).passed


def test_degenerate_examples():
    f, r, v = degenerate_construction([1, 0], 2.0, ScalarTrace.of([0, 1, 2]))
    assert annihilated_direction(r.functional).tolist() == [0.0, 0.5]
    assert np.all(r.scalar_trace.values == 0) and np.all(r.variation.values == 0)
    assert np.all(r.f1.values == 0) and np.all(r.f2.values == 0)
    assert v.passed
    _, r, v = degenerate_construction([1, 0], 2.0, ScalarTrace.of([2, 2, 2]))
    assert v.passed and np.all(r.f1.values == 0)
    f, r, v = degenerate_construction([1, 1], 2.0, ScalarTrace.of([0, 1, 3]))
    y = f.values[-1] / 3.0
    assert y[0] == -y[1] != 0
    assert v.passed and v.residual == 0.0


def test_degenerate_errors():
    with pytest.raises(DomainError):
        degenerate_construction([1.0], 2.0, ScalarTrace.of([0, 1]))
    with pytest.raises(ValueError):
        degenerate_construction([1.0, 0.0], 2.0, ScalarTrace.of([1, 0]))


@given(nonzero_vectors(min_dim=2, max_dim=8), st.sampled_from([1.0, 2.0, math.inf, 1.5]), st.integers(0, 2**32 - 1))
def test_degenerate_exactly_zero(x0, p, seed):
    rng = np.random.default_rng(seed)
    gamma = ScalarTrace.of(np.cumsum(rng.uniform(0, 3, size=10)))
    _, r, v = degenerate_construction(x0, p, gamma)
    assert v.passed
    assert r.residual == 0.0
    assert np.all(r.functional((r.f1 - r.f2).values) == 0.0)
