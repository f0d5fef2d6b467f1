"""Independent brute-force oracles used by the verification suites and tests.

None of these share code with the routines they check.
"""

from __future__ import annotations

import itertools
import math
from fractions import Fraction

import numpy as np
from scipy.optimize import minimize


def brute_force_tv(values) -> float:
    """Largest partition sum over every subset of interior grid nodes."""
    values = [float(v) for v in values]
    m = len(values) - 1
    if m < 1:
        return 0.0
    interior = range(1, m)
    best = 0.0
    for r in range(m):
        for subset in itertools.combinations(interior, r):
            nodes = (0, *subset, m)
            total = 0.0
            for a, b in zip(nodes, nodes[1:]):
                total += abs(values[b] - values[a])
            best = max(best, total)
    return best


def _vertex_max(coeffs, p: float) -> float:
    if p == 1:
        # extreme points of the l1 ball are ±e_i
        return float(max(abs(c) for c in coeffs))
    best = -math.inf
    for signs in itertools.product((-1.0, 1.0), repeat=len(coeffs)):
        best = max(best, sum(s * c for s, c in zip(signs, coeffs)))
    return float(best)


def sphere_max(coeffs, p: float, rng: np.random.Generator, n_samples: int = 256) -> float:
    """``sup {c . u : ||u||_p = 1}`` found by search rather than by formula.

    ``p = 1`` and ``p = inf`` enumerate the vertices of the unit ball. Other
    ``p`` sample the sphere and refine the best sample with BFGS on the
    scale-invariant objective ``-c . u / ||u||_p``.
    """
    coeffs = np.asarray(coeffs, dtype=float)
    if p == 1 or math.isinf(p):
        return _vertex_max(coeffs, p)

    def objective(u):
        n = np.sum(np.abs(u) ** p) ** (1.0 / p)
        return -float(coeffs @ u) / n

    u = rng.normal(size=(n_samples, coeffs.size))
    norms = np.sum(np.abs(u) ** p, axis=1) ** (1.0 / p)
    vals = (u @ coeffs) / norms
    start = u[int(np.argmax(vals))] / norms[int(np.argmax(vals))]
    res = minimize(objective, start, method="BFGS", options={"gtol": 1e-10})
    return max(-float(res.fun), float(np.max(vals)))


def _exact_det(rows) -> Fraction:
    m = [list(r) for r in rows]
    n = len(m)
    det = Fraction(1)
    for col in range(n):
        pivot = next((r for r in range(col, n) if m[r][col] != 0), None)
        if pivot is None:
            return Fraction(0)
        if pivot != col:
            m[col], m[pivot] = m[pivot], m[col]
            det = -det
        det *= m[col][col]
        for r in range(col + 1, n):
            factor = m[r][col] / m[col][col]
            if factor:
                for c in range(col, n):
                    m[r][c] -= factor * m[col][c]
    return det


def gram_rank(vectors) -> int:
    """Rank via exact Gram determinants: greedily keep rows that stay independent."""
    rows = [[Fraction(float(v)) for v in vec] for vec in vectors]
    chosen = []
    for row in rows:
        trial = chosen + [row]
        gram = [[sum(a * b for a, b in zip(u, v)) for v in trial] for u in trial]
        if _exact_det(gram) != 0:
            chosen = trial
    return len(chosen)
