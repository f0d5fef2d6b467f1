"""The strong relation ``x ~_{x0} y`` (``x - y ⊥ x0``) and checks of its laws."""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .latcore import is_orthogonal, join, meet, neg, pos
from .validation import Tolerance, check_tolerance, check_vector
from .verdict import Verdict


@dataclass(frozen=True, eq=False)
class StrongRelation:
    """``x ~ y`` iff ``x - y`` is orthogonal to ``base``.

    A zero base is allowed; every pair is then related and
    :attr:`base_is_zero` flags the degenerate case.
    """

    base: np.ndarray
    tol: Tolerance = field(default_factory=Tolerance.from_env)

    def __post_init__(self):
        object.__setattr__(self, "base", check_vector(self.base, name="base"))
        object.__setattr__(self, "tol", check_tolerance(self.tol))

    @property
    def dim(self) -> int:
        return self.base.size

    @property
    def base_is_zero(self) -> bool:
        return not np.any(self.base)

    def scaled(self, beta: float) -> "StrongRelation":
        return StrongRelation(beta * self.base, self.tol)

    def __call__(self, x, y) -> bool:
        return strongly_related(self, x, y)


def strongly_related(rel: StrongRelation, x, y) -> bool:
    x = check_vector(x, rel.dim, "x")
    y = check_vector(y, rel.dim, "y")
    return is_orthogonal(x - y, rel.base, rel.tol)


def check_equivalence(rel: StrongRelation, x, y, z) -> Verdict:
    """Reflexivity, symmetry and transitivity of ``rel`` on a triple."""
    pts = [check_vector(v, rel.dim) for v in (x, y, z)]
    related = {(i, j): rel(pts[i], pts[j]) for i in range(3) for j in range(3)}
    checks = {
        "reflexive": all(related[i, i] for i in range(3)),
        "symmetric": all(related[i, j] == related[j, i] for i in range(3) for j in range(3)),
        "transitive": all(
            related[i, k] or not (related[i, j] and related[j, k])
            for i in range(3)
            for j in range(3)
            for k in range(3)
        ),
    }
    notes = ("base_zero",) if rel.base_is_zero else ()
    return Verdict("strong_equivalence", checks, notes=notes)


def check_scalar_invariance(rel: StrongRelation, x, y, alpha: float, beta: float) -> Verdict:
    if not rel(x, y):
        raise ValueError("scalar invariance requires x ~ y")
    x = check_vector(x, rel.dim)
    y = check_vector(y, rel.dim)
    scaled = rel.scaled(beta)
    checks = {
        "scale_elements": rel(alpha * x, alpha * y),
        "scale_base": scaled(x, y),
        "scale_both": scaled(alpha * x, alpha * y),
    }
    return Verdict("scalar_invariance", checks)


def check_additivity(rel: StrongRelation, x1, y1, x2, y2) -> Verdict:
    if not (rel(x1, y1) and rel(x2, y2)):
        raise ValueError("additivity requires x1 ~ y1 and x2 ~ y2")
    x1, y1, x2, y2 = (check_vector(v, rel.dim) for v in (x1, y1, x2, y2))
    checks = {
        "sum": rel(x1 + x2, y1 + y2),
        "difference": rel(x1 - x2, y1 - y2),
    }
    return Verdict("additivity", checks)


def characterization_values(rel: StrongRelation, x, y, z) -> tuple[bool, bool, bool, bool]:
    """Truth values of the four equivalent forms of ``x ~ y``.

    1. ``x ~ y``
    2. ``x+ ~ y+`` and ``x- ~ y-``
    3. ``x∨y ~ x∧y``
    4. ``x∨w ~ y∨w`` and ``x∧w ~ y∧w`` for ``w`` in ``{z, 0}`` (sampled form
       of the universally quantified statement)
    """
    x = check_vector(x, rel.dim)
    y = check_vector(y, rel.dim)
    z = check_vector(z, rel.dim)
    c1 = rel(x, y)
    c2 = rel(pos(x), pos(y)) and rel(neg(x), neg(y))
    c3 = rel(join(x, y), meet(x, y))
    c4 = all(
        rel(join(x, w), join(y, w)) and rel(meet(x, w), meet(y, w))
        for w in (z, np.zeros_like(z))
    )
    return c1, c2, c3, c4


def check_characterizations(rel: StrongRelation, x, y, z) -> Verdict:
    values = characterization_values(rel, x, y, z)
    return Verdict(
        "strong_characterizations",
        {"all_equivalent": len(set(values)) == 1},
        values=values,
    )


def check_abs_properties(rel: StrongRelation, x, y) -> Verdict:
    """Five implications about ``|.|``, ``∨`` and ``∧`` under ``~``.

    Each item is an implication; an item whose hypothesis fails on the given
    pair is recorded as vacuously satisfied (listed in ``notes``). ``values``
    reports which hypotheses were active.
    """
    x = check_vector(x, rel.dim)
    y = check_vector(y, rel.dim)
    zero = np.zeros_like(x)
    ax, ay = np.abs(x), np.abs(y)
    s, d = np.abs(x + y), np.abs(x - y)

    def related_to_zero(v):
        return rel(v, zero)

    active = []
    checks = {}

    h1 = rel(x, y)
    active.append(h1)
    checks["1_abs_preserved"] = (not h1) or rel(ax, ay)

    h2 = rel(ax, ay)
    active.append(h2)
    checks["2_meet_of_abs_sums"] = (not h2) or related_to_zero(meet(s, d))

    h3 = rel(ax, -ay)
    active.append(h3)
    checks["3_join_of_abs_sums"] = (not h3) or (
        related_to_zero(join(s, d)) and rel(x, y) and rel(x, -y)
    )

    h4 = related_to_zero(join(x, y)) and related_to_zero(meet(x, y))
    active.append(h4)
    checks["4_join_meet_to_zero"] = (not h4) or rel(x, y)

    h5 = rel(x, y) and rel(x, -y)
    active.append(h5)
    checks["5_all_to_zero"] = (not h5) or all(
        related_to_zero(v)
        for v in (x, join(x, y), meet(x, y), join(ax, ay), meet(ax, ay))
    )
    notes = tuple(f"item{i + 1}_vacuous" for i, a in enumerate(active) if not a)
    return Verdict("abs_properties", checks, values=tuple(active), notes=notes)


def related_to_zero_self(x, tol=None) -> bool:
    """``x ~_x 0``; holds exactly when ``x`` is zero up to tolerance."""
    x = check_vector(x)
    return StrongRelation(x, check_tolerance(tol))(x, np.zeros_like(x))


__all__ = [
    "StrongRelation",
    "characterization_values",
    "check_abs_properties",
    "check_additivity",
    "check_characterizations",
    "check_equivalence",
    "check_scalar_invariance",
    "related_to_zero_self",
    "strongly_related",
]
