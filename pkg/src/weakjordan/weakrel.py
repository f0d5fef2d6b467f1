"""Sampled curves, linear functionals and the weak relation between curves.

A curve ``f: [a, b] -> R^n`` is represented by its samples on a strictly
increasing grid; every statement "for all t" is read as "for every grid node".
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .latcore import is_orthogonal
from .validation import (
    DimensionMismatchError,
    DomainError,
    check_norm,
    check_tolerance,
    check_vector,
    dual_index,
    lp_norm,
)
from .verdict import Verdict

_UNIT_ROUNDOFF = 2.0**-53


@dataclass(frozen=True, eq=False)
class SampledCurve:
    """Values of a vector-valued curve on a strictly increasing grid."""

    grid: np.ndarray
    values: np.ndarray

    def __post_init__(self):
        grid = np.array(self.grid, dtype=float)
        values = np.array(self.values, dtype=float)
        if grid.ndim != 1 or grid.size < 2:
            raise ValueError("grid needs at least two nodes")
        if not np.all(np.isfinite(grid)):
            raise ValueError("grid has non-finite nodes")
        steps = np.diff(grid)
        if np.any(steps <= 0):
            bad = int(np.argmax(steps <= 0)) + 1
            raise ValueError(f"grid is not strictly increasing at node {bad}")
        if values.ndim == 1:
            values = values.reshape(-1, 1)
        if values.ndim != 2 or values.shape[0] != grid.size:
            raise ValueError(
                f"values must have shape ({grid.size}, dim), got {values.shape}"
            )
        if values.shape[1] < 1:
            raise ValueError("curve dimension must be positive")
        if not np.all(np.isfinite(values)):
            raise ValueError("curve has non-finite values")
        grid.setflags(write=False)
        values.setflags(write=False)
        object.__setattr__(self, "grid", grid)
        object.__setattr__(self, "values", values)

    @classmethod
    def from_function(cls, grid, func):
        grid = np.asarray(grid, dtype=float)
        return cls(grid, np.array([np.atleast_1d(func(t)) for t in grid], dtype=float))

    @property
    def dim(self) -> int:
        return self.values.shape[1]

    @property
    def n_nodes(self) -> int:
        return self.grid.size

    def with_values(self, values) -> "SampledCurve":
        return SampledCurve(self.grid, values)

    def _check_compatible(self, other: "SampledCurve"):
        if self.grid.shape != other.grid.shape or not np.array_equal(self.grid, other.grid):
            raise ValueError("curves are sampled on different grids")
        if self.dim != other.dim:
            raise DimensionMismatchError(f"curve dimensions differ: {self.dim} vs {other.dim}")

    def __add__(self, other: "SampledCurve") -> "SampledCurve":
        self._check_compatible(other)
        return self.with_values(self.values + other.values)

    def __sub__(self, other: "SampledCurve") -> "SampledCurve":
        self._check_compatible(other)
        return self.with_values(self.values - other.values)

    def __repr__(self):
        return f"SampledCurve(n_nodes={self.n_nodes}, dim={self.dim})"


@dataclass(frozen=True, eq=False)
class Functional:
    """Linear functional ``v -> sum_i coeffs_i v_i`` on ``(R^n, ||.||_p)``.

    ``norm`` is the index ``p`` of the space the functional acts on; its own
    norm is the dual ``q``-norm of ``coeffs``.

    Evaluation multiplies elementwise before summing, and any result whose
    magnitude is below the a-priori rounding bound ``gamma_n * sum|c_i v_i|``
    is returned as exactly ``0.0``: such a value carries no significant digit
    and the true value may be zero.
    """

    coeffs: np.ndarray
    norm: float = 2.0

    def __post_init__(self):
        coeffs = check_vector(self.coeffs, name="coeffs")
        object.__setattr__(self, "coeffs", coeffs)
        object.__setattr__(self, "norm", check_norm(self.norm))

    @classmethod
    def basis(cls, i: int, dim: int, norm: float = 2.0) -> "Functional":
        c = np.zeros(dim)
        c[i] = 1.0
        return cls(c, norm)

    @property
    def dim(self) -> int:
        return self.coeffs.size

    @property
    def dual_norm_index(self) -> float:
        return dual_index(self.norm)

    @property
    def dual_norm(self) -> float:
        return lp_norm(self.coeffs, self.dual_norm_index)

    def is_zero(self) -> bool:
        return not np.any(self.coeffs)

    def __call__(self, v):
        v = np.asarray(v, dtype=float)
        if v.shape[-1] != self.dim:
            raise DimensionMismatchError(
                f"functional of dimension {self.dim} applied to dimension {v.shape[-1]}"
            )
        terms = v * self.coeffs
        value = terms.sum(axis=-1)
        # below this the sum is indistinguishable from 0 given one rounding
        # per input entry, one per product and the summation
        n = self.dim + 1
        gamma = n * _UNIT_ROUNDOFF / (1.0 - n * _UNIT_ROUNDOFF)
        floor = gamma * np.abs(terms).sum(axis=-1)
        value = np.where(np.abs(value) <= floor, 0.0, value)
        if value.ndim == 0:
            return float(value)
        return value

    def on_curve(self, f: SampledCurve) -> np.ndarray:
        """Scalar trace ``t -> x*(f(t))`` on the grid of ``f``."""
        return self(f.values)

    def __repr__(self):
        return f"Functional(coeffs={self.coeffs.tolist()}, norm={self.norm})"


def _check_pair(f1: SampledCurve, f2: SampledCurve):
    f1._check_compatible(f2)


def _check_functional(xstar: Functional, dim: int):
    if xstar.is_zero():
        raise DomainError("the functional must be non-zero")
    if xstar.dim != dim:
        raise DimensionMismatchError(f"functional dimension {xstar.dim} != curve dimension {dim}")


def weakly_related(f1: SampledCurve, f2: SampledCurve, xstar: Functional, tol=None) -> bool:
    """``f1 ~_{x*} f2``: ``x*`` takes the same value on both curves at every node."""
    tol = check_tolerance(tol)
    _check_pair(f1, f2)
    _check_functional(xstar, f1.dim)
    a = xstar.on_curve(f1)
    b = xstar.on_curve(f2)
    bound = tol.eps * (1.0 + np.maximum(np.abs(a), np.abs(b)))
    return bool(np.all(np.abs(a - b) <= bound))


def _svd_of_differences(f1: SampledCurve, f2: SampledCurve, tol):
    diffs = (f1 - f2).values
    _, s, vt = np.linalg.svd(diffs, full_matrices=True)
    threshold = tol.eps * (1.0 + float(np.max(np.abs(diffs), initial=0.0)))
    rank = int(np.sum(s > threshold))
    return diffs, rank, vt


def range_span_basis(f1: SampledCurve, f2: SampledCurve, tol=None) -> np.ndarray:
    """Euclidean-orthonormal basis (as rows) of ``span{f1(t) - f2(t)}``.

    The numerical rank counts singular values above
    ``eps * (1 + max |entry|)`` of the difference matrix.
    """
    tol = check_tolerance(tol)
    _check_pair(f1, f2)
    _, rank, vt = _svd_of_differences(f1, f2, tol)
    return vt[:rank].copy()


def check_characterizations_weak(f1, f2, xstar: Functional, tol=None) -> Verdict:
    """Evaluate the five equivalent forms of ``f1 ~_{x*} f2`` and compare them.

    The forms are: the relation itself; the scalar self-relation
    ``r ~_r 0`` of every ``r = x*(f1(t) - f2(t))``; range, span and closed
    span contained in ``null(x*)``. In finite dimension the closed span is
    the span, so the last two coincide.
    """
    tol = check_tolerance(tol)
    _check_pair(f1, f2)
    _check_functional(xstar, f1.dim)
    diffs = (f1 - f2).values
    unit_bound = tol.eps * max(lp_norm(xstar.coeffs, 2.0), 1.0)
    scale = 1.0 + float(np.max(np.abs(diffs), initial=0.0))

    related = weakly_related(f1, f2, xstar, tol)
    scalar = xstar(diffs)
    self_related = all(is_orthogonal([r], [r], tol) for r in scalar)
    in_range = bool(np.all(np.abs(scalar) <= unit_bound * scale))
    basis = range_span_basis(f1, f2, tol)
    if basis.shape[0] == 0:
        in_span = True
    else:
        in_span = bool(np.all(np.abs(xstar(basis)) <= unit_bound))
    in_closure = in_span
    values = (related, self_related, in_range, in_span, in_closure)
    checks = {"all_equivalent": len(set(values)) == 1}
    residual = float(np.max(np.abs(scalar), initial=0.0))
    return Verdict("weak_characterizations", checks, residual=residual, values=values)


def find_witness_functional(f1, f2, tol=None, norm=2.0) -> Functional | None:
    """Non-zero functional of unit dual norm annihilating every difference.

    Returns ``None`` when the differences span the whole space, in which case
    no such functional exists. When ``f1 == f2`` the first coordinate
    functional is returned.
    """
    tol = check_tolerance(tol)
    _check_pair(f1, f2)
    p = check_norm(norm)
    q = dual_index(p)
    n = f1.dim
    diffs, rank, vt = _svd_of_differences(f1, f2, tol)
    if rank >= n:
        return None
    if rank == 0:
        return Functional.basis(0, n, p)
    c = vt[rank].copy()
    lead = int(np.flatnonzero(np.abs(c) > 0)[0])
    if c[lead] < 0:
        c = -c
    c /= lp_norm(c, q)
    return Functional(c, p)


def separated_implies_equal(f1, f2, tol=None) -> Verdict:
    """Compare "related under every coordinate functional" with equality."""
    tol = check_tolerance(tol)
    _check_pair(f1, f2)
    per_coord = tuple(
        weakly_related(f1, f2, Functional.basis(i, f1.dim), tol) for i in range(f1.dim)
    )
    all_related = all(per_coord)
    equal = all(tol.close(a, b) for a, b in zip(f1.values, f2.values))
    return Verdict(
        "separation",
        {"related_iff_equal": all_related == equal},
        residual=tol.residual(f1.values, f2.values),
        values=per_coord,
    )


def check_equivalence_on_functions(f1, f2, f3, xstar: Functional, tol=None) -> Verdict:
    tol = check_tolerance(tol)

    def rel(a, b):
        return weakly_related(a, b, xstar, tol)

    curves = (f1, f2, f3)
    checks = {
        "reflexive": all(rel(f, f) for f in curves),
        "symmetric": all(rel(a, b) == rel(b, a) for a in curves for b in curves),
        "transitive": all(
            rel(a, c) or not (rel(a, b) and rel(b, c))
            for a in curves
            for b in curves
            for c in curves
        ),
    }
    return Verdict("weak_equivalence", checks)


__all__ = [
    "Functional",
    "SampledCurve",
    "check_characterizations_weak",
    "check_equivalence_on_functions",
    "find_witness_functional",
    "range_span_basis",
    "separated_implies_equal",
    "weakly_related",
]
