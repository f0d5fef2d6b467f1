"""Bounded variation of sampled scalar traces and of vector curves under probes.

Variation is taken over the sample grid. Refining a partition can only
increase a partition sum, so the grid sum is the exact total variation of the
sampled function (and of its piecewise-monotone interpolant).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple

import numpy as np

from .cone import ExtensibleCone, contains
from .validation import DimensionMismatchError, DomainError, check_tolerance
from .verdict import Verdict
from .weakrel import Functional, SampledCurve


@dataclass(frozen=True, eq=False)
class ScalarTrace:
    grid: np.ndarray
    values: np.ndarray

    def __post_init__(self):
        grid = np.array(self.grid, dtype=float)
        values = np.array(self.values, dtype=float)
        if grid.ndim != 1 or grid.size < 1:
            raise ValueError("empty grid")
        if values.shape != grid.shape:
            raise ValueError(f"values shape {values.shape} does not match grid {grid.shape}")
        if np.any(np.diff(grid) <= 0):
            raise ValueError("grid must be strictly increasing")
        if not (np.all(np.isfinite(grid)) and np.all(np.isfinite(values))):
            raise ValueError("trace has non-finite entries")
        grid.setflags(write=False)
        values.setflags(write=False)
        object.__setattr__(self, "grid", grid)
        object.__setattr__(self, "values", values)

    @classmethod
    def of(cls, values, grid=None) -> "ScalarTrace":
        values = np.asarray(values, dtype=float)
        if grid is None:
            grid = np.arange(values.size, dtype=float)
        return cls(grid, values)

    def __len__(self):
        return self.values.size


VariationTrace = ScalarTrace


class ScalarJordan(NamedTuple):
    """``g - g(t0) = upper - lower`` with both parts non-decreasing from 0."""

    upper: ScalarTrace
    lower: ScalarTrace
    offset: float


def _as_trace(g) -> ScalarTrace:
    if isinstance(g, ScalarTrace):
        return g
    return ScalarTrace.of(g)


def _running_variation(values: np.ndarray) -> np.ndarray:
    out = np.zeros_like(values)
    if values.size > 1:
        np.cumsum(np.abs(np.diff(values)), out=out[1:])
    return out


def total_variation(g) -> float:
    """Sum of ``|g(t_i) - g(t_{i-1})|`` accumulated left to right."""
    g = _as_trace(g)
    return float(_running_variation(g.values)[-1])


def variation_function(g) -> ScalarTrace:
    g = _as_trace(g)
    return ScalarTrace(g.grid, _running_variation(g.values))


def jordan_scalar(g) -> ScalarJordan:
    g = _as_trace(g)
    v = _running_variation(g.values)
    offset = float(g.values[0])
    w = v - (g.values - offset)
    return ScalarJordan(ScalarTrace(g.grid, v), ScalarTrace(g.grid, w), offset)


def is_increasing_scalar(g, tol=None) -> bool:
    tol = check_tolerance(tol)
    g = _as_trace(g)
    steps = np.diff(g.values)
    if steps.size == 0:
        return True
    slack = tol.eps * (1.0 + np.maximum(np.abs(g.values[1:]), np.abs(g.values[:-1])))
    return bool(np.all(steps >= -slack))


def is_increasing_cone(f: SampledCurve, cone: ExtensibleCone, tol=None) -> bool:
    """Every grid step of ``f`` lies in ``cone``."""
    if f.dim != cone.dim:
        raise DimensionMismatchError(f"curve dimension {f.dim} != cone dimension {cone.dim}")
    tol = check_tolerance(tol)
    return all(contains(cone, step, tol) for step in np.diff(f.values, axis=0))


def weak_variation(f: SampledCurve, xstar: Functional) -> float:
    return total_variation(ScalarTrace(f.grid, xstar.on_curve(f)))


def is_wbv(f: SampledCurve, probes) -> Verdict:
    """Per-probe total variations of ``f``.

    On a finite grid every probe has finite variation, so the verdict always
    passes; it records the variations and that the probe set is a finite
    sample of the dual space.
    """
    probes = list(probes)
    if not probes:
        raise ValueError("at least one probe functional is required")
    tvs = []
    for probe in probes:
        if probe.is_zero():
            raise DomainError("probe functionals must be non-zero")
        tvs.append(weak_variation(f, probe))
    finite = all(np.isfinite(tvs))
    return Verdict(
        "wbv",
        {"finite_variation": bool(finite)},
        residual=float(max(tvs)),
        values=tuple(tvs),
        notes=("finite_probe_set",),
    )


__all__ = [
    "ScalarJordan",
    "ScalarTrace",
    "VariationTrace",
    "is_increasing_cone",
    "is_increasing_scalar",
    "is_wbv",
    "jordan_scalar",
    "total_variation",
    "variation_function",
    "weak_variation",
]
