"""Input validation helpers and the shared floating-point tolerance rule."""

from __future__ import annotations

import math
import os
from dataclasses import dataclass
from fractions import Fraction
from numbers import Real

import numpy as np

TOL_ENV_VAR = "WEAKJORDAN_TOL"
DEFAULT_EPS = 1e-9


class DimensionMismatchError(ValueError):
    """Operands live in spaces of different dimension."""


class DomainError(ValueError):
    """Input is well-formed but outside the operation's mathematical domain.

    Raised for a zero base vector, a zero functional, or an ``alpha`` outside
    ``(0, ||x0||]``.
    """


def default_eps() -> float:
    raw = os.environ.get(TOL_ENV_VAR)
    if raw is None or raw.strip() == "":
        return DEFAULT_EPS
    eps = float(raw)
    if not (eps > 0 and math.isfinite(eps)):
        raise ValueError(f"{TOL_ENV_VAR} must be a positive finite real, got {raw!r}")
    return eps


@dataclass(frozen=True)
class Tolerance:
    """Hybrid relative/absolute comparison rule.

    ``a`` and ``b`` are considered equal when
    ``||a - b||_inf <= eps * (1 + max(||a||_inf, ||b||_inf))``.
    """

    eps: float = DEFAULT_EPS

    def __post_init__(self):
        if not (self.eps > 0 and math.isfinite(self.eps)):
            raise ValueError(f"eps must be positive and finite, got {self.eps!r}")

    @classmethod
    def from_env(cls) -> "Tolerance":
        return cls(default_eps())

    def bound(self, a, b=0.0) -> float:
        scale = max(_sup(a), _sup(b))
        return self.eps * (1.0 + scale)

    def close(self, a, b) -> bool:
        a = np.asarray(a, dtype=float)
        b = np.asarray(b, dtype=float)
        return _sup(a - b) <= self.bound(a, b)

    def leq(self, a, b) -> bool:
        """Coordinatewise ``a <= b`` up to the tolerance rule."""
        a = np.asarray(a, dtype=float)
        b = np.asarray(b, dtype=float)
        excess = float(np.max(a - b, initial=0.0))
        return excess <= self.bound(a, b)

    def is_zero(self, a) -> bool:
        return self.close(a, 0.0)

    def residual(self, a, b) -> float:
        return _sup(np.asarray(a, dtype=float) - np.asarray(b, dtype=float))


def _sup(a) -> float:
    a = np.asarray(a, dtype=float)
    if a.size == 0:
        return 0.0
    return float(np.max(np.abs(a)))


def check_tolerance(tol) -> Tolerance:
    if tol is None:
        return Tolerance.from_env()
    if isinstance(tol, Tolerance):
        return tol
    return Tolerance(float(tol))


def check_vector(x, dim: int | None = None, name: str = "x") -> np.ndarray:
    """Coerce ``x`` to a read-only 1-D float array with finite entries."""
    arr = np.array(x, dtype=float)
    if arr.ndim == 0:
        arr = arr.reshape(1)
    if arr.ndim != 1:
        raise ValueError(f"{name} must be one-dimensional, got shape {arr.shape}")
    if arr.size == 0:
        raise ValueError(f"{name} must have at least one coordinate")
    if not np.all(np.isfinite(arr)):
        raise ValueError(f"{name} has non-finite coordinates")
    if dim is not None and arr.size != dim:
        raise DimensionMismatchError(f"{name} has dimension {arr.size}, expected {dim}")
    arr.setflags(write=False)
    return arr


def check_same_dim(*vectors: np.ndarray) -> int:
    dims = {v.shape[0] for v in vectors}
    if len(dims) != 1:
        raise DimensionMismatchError(f"dimension mismatch: {sorted(dims)}")
    return dims.pop()


def check_nonzero(x: np.ndarray, name: str = "x0") -> np.ndarray:
    if not np.any(x):
        raise DomainError(f"{name} must be non-zero")
    return x


def check_norm(p) -> float:
    """Normalise a norm index to a float in ``[1, inf]``.

    Accepts numbers, :class:`fractions.Fraction`, and the strings ``p1``,
    ``p2``, ``p3``, ``pinf``, ``inf`` and ``p:<rational>`` (e.g. ``p:3/2``).
    """
    if isinstance(p, str):
        return parse_norm(p)
    if isinstance(p, Fraction):
        p = float(p)
    if not isinstance(p, Real):
        raise ValueError(f"norm index must be real, got {p!r}")
    p = float(p)
    if math.isnan(p) or p < 1:
        raise ValueError(f"norm index must be >= 1, got {p!r}")
    return p


def parse_norm(text: str) -> float:
    s = text.strip().lower()
    if s in ("pinf", "inf", "p:inf", "infinity"):
        return math.inf
    if s.startswith("p:"):
        body = s[2:]
    elif s.startswith("p"):
        body = s[1:]
    else:
        body = s
    try:
        value = Fraction(body)
    except (ValueError, ZeroDivisionError):
        raise ValueError(f"unrecognised norm index {text!r}") from None
    if value < 1:
        raise ValueError(f"norm index must be >= 1, got {text!r}")
    return float(value)


def dual_index(p: float) -> float:
    """Conjugate exponent ``q`` with ``1/p + 1/q = 1``."""
    if p == 1:
        return math.inf
    if math.isinf(p):
        return 1.0
    return p / (p - 1.0)


def lp_norm(x, p: float) -> float:
    return float(np.linalg.norm(np.asarray(x, dtype=float), ord=p))


def norm_label(p: float) -> str:
    if math.isinf(p):
        return "pinf"
    if float(p).is_integer():
        return f"p{int(p)}"
    return f"p:{Fraction(p).limit_denominator(10**6)}"
