"""scikit-learn compatible front end for the weak Jordan decomposition."""

from __future__ import annotations

import numpy as np
from sklearn.base import BaseEstimator, TransformerMixin
from sklearn.utils.validation import check_array, check_is_fitted

from .cone import build_cone
from .jordan import DecompositionResult, decompose
from .validation import Tolerance, check_nonzero, check_vector
from .weakrel import SampledCurve


class WeakJordanDecomposer(TransformerMixin, BaseEstimator):
    """Decompose sampled curves into two cone-increasing components.

    Rows of ``X`` are the curve's samples, ordered along the grid; columns are
    coordinates. ``transform`` returns ``[f1 | f2]`` stacked horizontally and
    ``inverse_transform`` maps that back to ``f1 - f2``, which agrees with the
    input curve under the functional induced by ``x0``.

    Parameters
    ----------
    x0 : array-like of shape (n_features,)
        Non-zero base vector generating the cone.
    norm : float or str, default=2
        Index ``p`` of the ambient norm (``1``, ``2``, ``inf``, ``"p:3/2"``...).
    alpha : float or None, default=None
        Cone aperture parameter in ``(0, ||x0||]``; ``None`` means ``||x0||``.
    tol : float, default=1e-9
        ``eps`` of the comparison rule used by all verifications.
    """

    def __init__(self, x0=None, norm=2.0, alpha=None, tol=1e-9):
        self.x0 = x0
        self.norm = norm
        self.alpha = alpha
        self.tol = tol

    def fit(self, X, y=None):
        X = check_array(X, ensure_min_samples=2)
        n_features = X.shape[1]
        if self.x0 is None:
            raise ValueError("x0 must be set before fitting")
        x0 = check_nonzero(check_vector(self.x0, n_features, "x0"))
        self.tol_ = Tolerance(float(self.tol))
        self.cone_ = build_cone(x0, self.norm, self.alpha, self.tol_)
        self.functional_ = self.cone_.functional
        self.n_features_in_ = n_features
        return self

    def decompose(self, X, grid=None) -> DecompositionResult:
        check_is_fitted(self, "cone_")
        X = check_array(X, ensure_min_samples=2)
        if X.shape[1] != self.n_features_in_:
            raise ValueError(
                f"X has {X.shape[1]} features, but the decomposer was fitted with "
                f"{self.n_features_in_}"
            )
        if grid is None:
            grid = np.arange(X.shape[0], dtype=float)
        return decompose(
            SampledCurve(grid, X), self.cone_.base, self.cone_.norm, self.cone_.alpha, self.tol_
        )

    def transform(self, X, grid=None):
        result = self.decompose(X, grid)
        return np.hstack([result.f1.values, result.f2.values])

    def inverse_transform(self, Z):
        check_is_fitted(self, "cone_")
        Z = check_array(Z)
        n = self.n_features_in_
        if Z.shape[1] != 2 * n:
            raise ValueError(f"expected {2 * n} columns, got {Z.shape[1]}")
        return Z[:, :n] - Z[:, n:]

    def score(self, X, y=None, grid=None):
        """Negative weak-relation residual of the decomposition (0 is best)."""
        return -self.decompose(X, grid).residual
