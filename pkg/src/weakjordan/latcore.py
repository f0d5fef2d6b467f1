"""Coordinatewise vector lattice on R^n.

Vectors are plain 1-D float arrays; every routine validates its inputs with
:func:`weakjordan.validation.check_vector` and returns fresh arrays.
"""

from __future__ import annotations

import math

import numpy as np

from .validation import (
    DimensionMismatchError,
    Tolerance,
    check_norm,
    check_same_dim,
    check_tolerance,
    check_vector,
    lp_norm,
)
from .verdict import LawResult, Verdict


def _pair(x, y):
    x = check_vector(x, name="x")
    y = check_vector(y, name="y")
    check_same_dim(x, y)
    return x, y


def join(x, y) -> np.ndarray:
    x, y = _pair(x, y)
    return np.maximum(x, y)


def meet(x, y) -> np.ndarray:
    x, y = _pair(x, y)
    return np.minimum(x, y)


def abs_(x) -> np.ndarray:
    return np.abs(check_vector(x))


def pos(x) -> np.ndarray:
    x = check_vector(x)
    return join(x, np.zeros_like(x))


def neg(x) -> np.ndarray:
    x = check_vector(x)
    return join(-x, np.zeros_like(x))


def is_orthogonal(x, y, tol=None) -> bool:
    """``x ⊥ y`` in the sense ``||x| - |y|| = |x| + |y|``.

    For the coordinatewise order this holds exactly when ``|x|`` and ``|y|``
    have disjoint supports.
    """
    x, y = _pair(x, y)
    tol = check_tolerance(tol)
    ax, ay = np.abs(x), np.abs(y)
    return tol.close(np.abs(ax - ay), ax + ay)


def orthogonality_residual(x, y) -> float:
    x, y = _pair(x, y)
    ax, ay = np.abs(x), np.abs(y)
    return float(np.max(np.abs(np.abs(ax - ay) - (ax + ay))))


def is_orthogonal_decomposition(x, x1, x2, tol=None) -> bool:
    """True when ``x = x1 - x2`` with ``x1, x2 >= 0`` and ``x1 ⊥ x2``."""
    tol = check_tolerance(tol)
    x = check_vector(x)
    x1 = check_vector(x1, x.size, "x1")
    x2 = check_vector(x2, x.size, "x2")
    zero = np.zeros_like(x)
    return (
        tol.leq(zero, x1)
        and tol.leq(zero, x2)
        and is_orthogonal(x1, x2, tol)
        and tol.close(x1 - x2, x)
    )


def decompose_unique(x, alternative=None, tol=None):
    """Split ``x`` into its positive and negative parts.

    If ``alternative=(x1, x2)`` is supplied and forms an orthogonal
    decomposition of ``x``, it must coincide with ``(x+, x-)``; a
    :class:`ValueError` is raised otherwise.
    """
    tol = check_tolerance(tol)
    x = check_vector(x)
    xp, xn = pos(x), neg(x)
    if alternative is not None:
        x1, x2 = alternative
        if is_orthogonal_decomposition(x, x1, x2, tol) and not (
            tol.close(x1, xp) and tol.close(x2, xn)
        ):
            raise ValueError("orthogonal decomposition is not unique")
    return xp, xn


def _eq(name, lhs, rhs, tol):
    return LawResult(name, tol.close(lhs, rhs), tol.residual(lhs, rhs))


def _le(name, lhs, rhs, tol):
    excess = float(np.max(lhs - rhs, initial=0.0))
    return LawResult(name, tol.leq(lhs, rhs), max(excess, 0.0))


def check_lattice_identities(x, y, z, tol=None) -> list[LawResult]:
    """Evaluate the standard vector-lattice identities on one triple.

    Returns one :class:`LawResult` per law: the join/meet formulas, the
    ``|x - y| = x∨y - x∧y`` identity, the reverse triangle bounds, Birkhoff's
    inequalities, the positive/negative part bounds, the two ``|x±y|``
    identities, the triangle inequality, associativity of the join and the
    least-upper-bound property of ``|x|``.
    """
    tol = check_tolerance(tol)
    x, y = _pair(x, y)
    z = check_vector(z, x.size, "z")
    ax, ay = np.abs(x), np.abs(y)
    d = np.abs(x - y)
    s = np.abs(x + y)
    jxy, mxy = join(x, y), meet(x, y)
    upper = join(join(x, -x), z)
    return [
        _eq("join_formula", jxy, 0.5 * (x + y + d), tol),
        _eq("meet_formula", mxy, 0.5 * (x + y - d), tol),
        _eq("abs_diff_join_minus_meet", d, jxy - mxy, tol),
        _le("reverse_triangle_plus", np.abs(ax - ay), s, tol),
        _le("reverse_triangle_minus", np.abs(ax - ay), d, tol),
        _le("birkhoff_join", np.abs(join(x, z) - join(y, z)), d, tol),
        _le("birkhoff_meet", np.abs(meet(x, z) - meet(y, z)), d, tol),
        _le("pos_part_lipschitz", np.abs(pos(x) - pos(y)), d, tol),
        _le("neg_part_lipschitz", np.abs(neg(x) - neg(y)), d, tol),
        _eq("abs_sum_join", join(s, d), ax + ay, tol),
        _eq("abs_sum_meet", meet(s, d), np.abs(ax - ay), tol),
        _le("triangle_inequality", s, ax + ay, tol),
        _eq("join_associative", join(jxy, z), join(x, join(y, z)), tol),
        _le("abs_least_upper_bound", ax, upper, tol),
    ]


def check_absolute_order_axioms(x, y, z, alpha: float, tol=None) -> Verdict:
    """Check the absolute-value axioms (a)-(e) on one instance.

    (a)-(c) are evaluated unconditionally. (d) and (e) are implications; when
    their hypotheses fail the check is recorded as vacuously true and noted.
    """
    tol = check_tolerance(tol)
    x, y = _pair(x, y)
    z = check_vector(z, x.size, "z")
    zero = np.zeros_like(x)
    px = pos(x)
    checks = {
        "a_positive_fixed": tol.close(np.abs(px), px),
        "b_abs_dominates": tol.leq(zero, np.abs(x) + x) and tol.leq(zero, np.abs(x) - x),
        "c_homogeneous": tol.close(np.abs(alpha * x), abs(alpha) * np.abs(x)),
    }
    notes = []
    ortho_xy = tol.close(np.abs(x - y), x + y)
    if ortho_xy and tol.leq(zero, z) and tol.leq(z, y):
        checks["d_hereditary"] = tol.close(np.abs(x - z), x + z)
    else:
        checks["d_hereditary"] = True
        notes.append("d_vacuous")
    if ortho_xy and tol.close(np.abs(x - z), x + z):
        ok = True
        for w in (np.abs(y + z), np.abs(y - z)):
            ok = ok and tol.close(np.abs(x - w), x + w)
        checks["e_additive"] = ok
    else:
        checks["e_additive"] = True
        notes.append("e_vacuous")
    return Verdict("absolute_order_axioms", checks, notes=tuple(notes))


def is_inf_orthogonal(x, y, norm=math.inf, samples: int = 21, tol=None) -> bool:
    """Sampled test of ``||a x + b y|| = max(||a x||, ||b y||)``.

    For the sup-norm and disjoint supports the answer is exact. Otherwise the
    identity is probed on a ``samples x samples`` grid of ``(a, b)`` in
    ``[-1, 1]^2`` plus the slice ``a = 1`` with ``b`` ranging over the grid
    values and their reciprocals. A ``True`` result is therefore only
    evidence: it is a necessary condition for ∞-orthogonality.
    """
    tol = check_tolerance(tol)
    x, y = _pair(x, y)
    if np.any(x < 0) or np.any(y < 0):
        raise ValueError("is_inf_orthogonal requires non-negative inputs")
    if samples < 1:
        raise ValueError("samples must be positive")
    p = check_norm(norm)
    if math.isinf(p) and not np.any((x > 0) & (y > 0)):
        return True
    grid = np.linspace(-1.0, 1.0, samples) if samples > 1 else np.array([1.0])
    nonzero = grid[grid != 0]
    slice_betas = np.concatenate([grid, 1.0 / nonzero])
    pairs = [(a, b) for a in grid for b in grid]
    pairs += [(1.0, b) for b in slice_betas]
    for a, b in pairs:
        lhs = lp_norm(a * x + b * y, p)
        rhs = max(lp_norm(a * x, p), lp_norm(b * y, p))
        if not tol.close(lhs, rhs):
            return False
    return True


def order_projection_conditions(p, tol=None) -> tuple[bool, bool, bool]:
    """Three equivalent order-projection tests in ``(R^n, sup-norm, e = 1)``.

    Returns ``(idempotent, e - p ~_p 0, p ~_{e-p} 0)``. The first is the
    coordinatewise characterisation ``p_i in {0, 1}``; the other two are the
    strong-relation forms.
    """
    tol = check_tolerance(tol)
    p = check_vector(p, name="p")
    if not tol.leq(np.zeros_like(p), p) or np.max(p) > 1.0 + tol.bound(1.0):
        raise ValueError("order projection test requires 0 <= p and ||p||_inf <= 1")
    e = np.ones_like(p)
    gap = np.minimum(np.abs(p), np.abs(e - p))
    idempotent = bool(2.0 * np.max(gap) <= tol.bound(e))
    return idempotent, is_orthogonal(e - p, p, tol), is_orthogonal(p, e - p, tol)


def is_order_projection(p, tol=None) -> bool:
    return order_projection_conditions(p, tol)[1]


__all__ = [
    "DimensionMismatchError",
    "Tolerance",
    "abs_",
    "check_absolute_order_axioms",
    "check_lattice_identities",
    "decompose_unique",
    "is_inf_orthogonal",
    "is_order_projection",
    "is_orthogonal",
    "is_orthogonal_decomposition",
    "join",
    "meet",
    "neg",
    "order_projection_conditions",
    "orthogonality_residual",
    "pos",
]
