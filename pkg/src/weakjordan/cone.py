"""Extensible cones ``{x : x*(x) >= alpha ||x||_p}`` generated by a non-zero vector.

The norming functional ``x*`` (``x*(x0) = ||x0||^2``, ``||x*|| = ||x0||``) is
produced by the duality map of the p-norm. For ``p = 1`` and ``p = inf`` the
norming functional is not unique and a fixed selection is used: the scaled
sign vector for ``p = 1`` and the lowest-index maximal coordinate for
``p = inf``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .validation import (
    DomainError,
    Tolerance,
    check_nonzero,
    check_norm,
    check_tolerance,
    check_vector,
    lp_norm,
)
from .verdict import Verdict
from .weakrel import Functional


def norming_functional(x0, norm=2.0) -> Functional:
    x0 = check_nonzero(check_vector(x0, name="x0"))
    p = check_norm(norm)
    size = lp_norm(x0, p)
    if p == 1:
        coeffs = size * np.sign(x0)
    elif math.isinf(p):
        j = int(np.argmax(np.abs(x0)))
        coeffs = np.zeros_like(x0)
        coeffs[j] = size * np.sign(x0[j])
    elif p == 2:
        coeffs = x0.copy()
    else:
        # normalise first so |u|^(p-1) cannot overflow
        u = x0 / size
        coeffs = size * np.sign(u) * np.abs(u) ** (p - 1.0)
    return Functional(coeffs, p)


@dataclass(frozen=True, eq=False)
class ExtensibleCone:
    """The cone generated by ``base`` with norming functional and ``alpha``.

    Use :func:`build_cone` rather than instantiating directly.
    """

    base: np.ndarray
    functional: Functional
    alpha: float
    norm: float

    @property
    def dim(self) -> int:
        return self.base.size

    @property
    def base_norm(self) -> float:
        return lp_norm(self.base, self.norm)

    @property
    def beta(self) -> float:
        return 1.0 / self.alpha

    def margin(self, x) -> float:
        """``x*(x) - alpha ||x||``; non-negative exactly on the cone."""
        x = check_vector(x, self.dim)
        return self.functional(x) - self.alpha * lp_norm(x, self.norm)

    def __contains__(self, x) -> bool:
        return contains(self, x)

    def to_dict(self) -> dict:
        return {
            "x0": self.base.tolist(),
            "functional": self.functional.coeffs.tolist(),
            "alpha": self.alpha,
            "beta": self.beta,
            "norm": self.norm if math.isfinite(self.norm) else "inf",
        }


def build_cone(x0, norm=2.0, alpha=None, tol=None) -> ExtensibleCone:
    """Cone containing ``x0``; ``alpha`` defaults to ``||x0||_p``."""
    tol = check_tolerance(tol)
    x0 = check_nonzero(check_vector(x0, name="x0"))
    p = check_norm(norm)
    size = lp_norm(x0, p)
    if alpha is None:
        alpha = size
    alpha = float(alpha)
    if not (alpha > 0 and alpha <= size * (1.0 + tol.eps)):
        raise DomainError(f"alpha must lie in (0, {size!r}], got {alpha!r}")
    xstar = norming_functional(x0, p)
    cone = ExtensibleCone(x0, xstar, alpha, p)
    if not tol.close(xstar(x0), size * size):
        raise ArithmeticError("norming functional does not reproduce ||x0||^2")
    return cone


def contains(cone: ExtensibleCone, x, tol=None) -> bool:
    tol = check_tolerance(tol)
    x = check_vector(x, cone.dim)
    value = cone.functional(x)
    floor = cone.alpha * lp_norm(x, cone.norm)
    return value >= floor - tol.bound(value, floor)


def leq(cone: ExtensibleCone, x, y, tol=None) -> bool:
    """``x <= y`` in the order induced by ``cone``."""
    x = check_vector(x, cone.dim, "x")
    y = check_vector(y, cone.dim, "y")
    return contains(cone, y - x, tol)


def ray_cone_membership(x0, v, tol=None) -> bool:
    """True iff ``v = delta * x0`` for some ``delta >= 0``."""
    tol = check_tolerance(tol)
    x0 = check_nonzero(check_vector(x0, name="x0"))
    v = check_vector(v, x0.size, "v")
    delta = float(v @ x0) / float(x0 @ x0)
    return delta >= -tol.eps and tol.close(v, delta * x0)


def check_norm_monotone(cone: ExtensibleCone, x, y, tol=None) -> Verdict:
    """``0 <= x <= y`` implies ``||x|| <= ||y||`` when ``alpha = ||x0||``."""
    tol = check_tolerance(tol)
    if not math.isclose(cone.alpha, cone.base_norm, rel_tol=tol.eps):
        raise ValueError("norm monotonicity needs alpha = ||x0||")
    x = check_vector(x, cone.dim, "x")
    y = check_vector(y, cone.dim, "y")
    if not (contains(cone, x, tol) and leq(cone, x, y, tol)):
        raise ValueError("norm monotonicity needs 0 <= x <= y in the cone")
    nx, ny = lp_norm(x, cone.norm), lp_norm(y, cone.norm)
    return Verdict(
        "norm_monotone",
        {"norm_ordered": nx <= ny + tol.bound(nx, ny)},
        residual=max(nx - ny, 0.0),
    )


def sample_member(cone: ExtensibleCone, rng: np.random.Generator, scale: float = 1.0) -> np.ndarray:
    """Random cone member: a positive multiple of ``x0`` plus an admissible tilt.

    A random unit direction ``w`` is added as ``x0_hat * delta + s * w`` with
    ``s`` drawn from the feasible interval (found by bisection on the
    membership margin, which is concave along the segment).
    """
    base = cone.base / cone.base_norm
    delta = scale * rng.uniform(0.1, 1.0)
    w = rng.normal(size=cone.dim)
    w /= max(lp_norm(w, cone.norm), 1e-300)
    center = delta * base
    coeffs, alpha, p = cone.functional.coeffs, cone.alpha, cone.norm

    def feasible(s):
        v = center + s * w
        return coeffs @ v - alpha * np.linalg.norm(v, ord=p) >= 0.0

    lo, hi = 0.0, delta
    if feasible(hi):
        s_max = hi
    else:
        for _ in range(60):
            mid = 0.5 * (lo + hi)
            if feasible(mid):
                lo = mid
            else:
                hi = mid
        s_max = lo
    s = rng.uniform(0.0, 0.9) * s_max
    return center + s * w


def check_cone_axioms(cone: ExtensibleCone, samples: int = 50, seed: int = 0, tol=None) -> Verdict:
    """Closure under sums and non-negative scaling, properness and closedness.

    Properness is spot-checked on ``±x`` pairs built from members and on a
    vector of size ``1e-12``; closedness on sequences ``x + m/k`` of members
    converging to a member ``x``.
    """
    tol = check_tolerance(tol)
    rng = np.random.default_rng(seed)
    checks = {"sum": True, "scaling": True, "proper": True, "closed": True, "base_member": True}
    checks["base_member"] = contains(cone, cone.base, tol)
    for _ in range(samples):
        x = sample_member(cone, rng)
        y = sample_member(cone, rng)
        delta = rng.uniform(0.0, 10.0)
        checks["sum"] &= contains(cone, x + y, tol)
        checks["scaling"] &= contains(cone, delta * x, tol) and contains(cone, 0.0 * x, tol)
        if contains(cone, -x, tol):
            checks["proper"] &= tol.is_zero(x)
        m = sample_member(cone, rng)
        seq_ok = all(contains(cone, x + m / k, tol) for k in (1, 10, 100, 1000))
        checks["closed"] &= seq_ok and contains(cone, x, tol)
    tiny = np.zeros(cone.dim)
    tiny[0] = 1e-12
    both = contains(cone, tiny, tol) and contains(cone, -tiny, tol)
    checks["proper"] &= (not both) or tol.is_zero(tiny)
    return Verdict("cone_axioms", {k: bool(v) for k, v in checks.items()})


__all__ = [
    "ExtensibleCone",
    "Tolerance",
    "build_cone",
    "check_cone_axioms",
    "check_norm_monotone",
    "contains",
    "leq",
    "norming_functional",
    "ray_cone_membership",
    "sample_member",
]
