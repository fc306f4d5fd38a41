"""NumPy reference kernel for the barycenter objective."""

from __future__ import annotations

import numpy as np


def objective(beta: np.ndarray, logw0: np.ndarray, x: np.ndarray):
    """Return (|d|^2, grad, d) where d is the weighted mean of the rows of ``beta``.

    ``beta`` holds the roots shifted by a fixed point of their affine span,
    ``logw0`` the log masses at x = 0. Weights are exp(logw0 + 2 beta.x).
    """
    z = logw0 + 2.0 * (beta @ x)
    z -= z.max()
    w = np.exp(z)
    w /= w.sum()
    d = w @ beta
    c = beta - d
    grad = 4.0 * ((w * (c @ d)) @ c)
    return float(d @ d), grad, d
