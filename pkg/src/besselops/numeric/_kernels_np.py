"""Numpy implementation of the hot quadrature kernels.

Mirrors the Cython extension `_ckernels`; selected at import time by
`kernels` when the compiled module is unavailable (or forced via the
BESSELOPS_KERNELS environment variable).
"""

from __future__ import annotations

import numpy as np

NAME = "numpy"


def k0_batch(xs: np.ndarray, u: np.ndarray, w: np.ndarray) -> np.ndarray:
    """sum_j w_j exp(-x_i cosh u_j) for each x_i."""
    xs = np.asarray(xs, dtype=float)
    ex = np.exp(-np.outer(xs, np.cosh(u)))
    return ex @ w


def kitau_batch(taus: np.ndarray, x: float, u: np.ndarray, w: np.ndarray) -> np.ndarray:
    """sum_j w_j exp(-x cosh u_j) cos(tau_i u_j) for each tau_i."""
    taus = np.asarray(taus, dtype=float)
    g = w * np.exp(-x * np.cosh(u))
    return np.cos(np.outer(taus, u)) @ g
