"""Macdonald functions K_0(x) and K_{i tau}(x).

Production path: the cosine-Fourier / cosh-integral representation
K_{i tau}(x) = int_0^inf exp(-x cosh u) cos(tau u) du, truncated where the
envelope drops below the absolute tolerance and evaluated on panelized
Gauss-Legendre grids.  The dense inner loops run in the compiled
`_ckernels` extension when it imported, else in the numpy fallback.

Verification path: `bessel_k0_series`, an ascending-series / asymptotic
split evaluated in mpmath big floats (the ascending series loses ~0.9x
digits to cancellation, so the working precision scales with x).  The two
routes are independent; tests require 1e-10 agreement.
"""

from __future__ import annotations

import math
import os

import numpy as np

from .quadrature import QuadratureConfig, gl_nodes

_FORCED = os.environ.get("BESSELOPS_KERNELS", "").strip().lower()
if _FORCED in ("", "cython", "c"):
    try:
        from . import _ckernels as _impl
    except ImportError:
        if _FORCED:
            raise
        from . import _kernels_np as _impl
else:
    from . import _kernels_np as _impl

BACKEND = _impl.NAME

__all__ = [
    "BACKEND",
    "bessel_k0",
    "bessel_k0_grid",
    "bessel_k0_series",
    "bessel_k_itau",
    "kitau_weighted_sum",
    "kernel_u_grid",
]

_DEFAULT_CFG = QuadratureConfig()


def kernel_u_grid(x_min: float, tau_max: float, abs_tol: float, order: int = 16):
    """Panelized GL grid for int_0^umax exp(-x cosh u) cos(tau u) du, valid
    for every x >= x_min and |tau| <= tau_max.

    Truncating at cosh(umax) = 1 + L/x makes the discarded tail of order
    exp(-x) * exp(-L), i.e. proportional to the kernel scale itself; the
    panel width resolves the fastest cosine oscillation.
    """
    if x_min <= 0:
        raise ValueError("requires x > 0")
    L = math.log(1.0 / abs_tol) + 10.0
    umax = math.acosh(1.0 + L / x_min)
    width = min(0.4, 4.0 / max(tau_max, 1.0))
    n_panels = max(4, int(math.ceil(umax / width)))
    x, w = gl_nodes(order)
    edges = np.linspace(0.0, umax, n_panels + 1)
    h = 0.5 * (edges[1] - edges[0])
    nodes = (edges[:-1, None] + h * (x[None, :] + 1.0)).ravel()
    weights = np.tile(h * w, n_panels)
    return nodes, weights


def bessel_k0_grid(xs, cfg: QuadratureConfig = _DEFAULT_CFG) -> np.ndarray:
    """K_0 on an array of x > 0 (cosh-integral route)."""
    xs = np.atleast_1d(np.asarray(xs, dtype=float))
    if np.any(xs <= 0):
        raise ValueError("K_0 requires x > 0")
    u, w = kernel_u_grid(float(xs.min()), 0.0, cfg.abs_tol)
    return _impl.k0_batch(xs, u, w)


def bessel_k0(x: float, cfg: QuadratureConfig = _DEFAULT_CFG) -> float:
    """K_0(x) for x > 0."""
    return float(bessel_k0_grid([x], cfg)[0])


def bessel_k_itau(tau: float, x: float, cfg: QuadratureConfig = _DEFAULT_CFG) -> float:
    """K_{i tau}(x), real for real tau; tau = 0 reduces to K_0."""
    if x <= 0:
        raise ValueError("K_{i tau} requires x > 0")
    tau = abs(float(tau))
    u, w = kernel_u_grid(x, tau, cfg.abs_tol)
    return float(_impl.kitau_batch(np.array([tau]), x, u, w)[0])


def kitau_weighted_sum(taus: np.ndarray, x: float, u: np.ndarray, w: np.ndarray) -> np.ndarray:
    """Backend dispatch: K_{i tau_k}(x) for an array of tau on a fixed u-grid."""
    return _impl.kitau_batch(taus, x, u, w)


def k0_weighted_sum(xs: np.ndarray, u: np.ndarray, w: np.ndarray) -> np.ndarray:
    """Backend dispatch: sum_j w_j exp(-x cosh u_j) over an array of x."""
    return _impl.k0_batch(xs, u, w)


# -- independent verification route -------------------------------------------


def bessel_k0_series(x: float) -> float:
    """K_0 by the ascending series (x <= 15) or the asymptotic series
    (x > 15), evaluated in big floats; independent of the quadrature route."""
    import mpmath as mp

    if x <= 0:
        raise ValueError("K_0 requires x > 0")
    if x <= 15.0:
        dps = 30 + int(math.ceil(0.9 * x))
        with mp.workdps(dps):
            xm = mp.mpf(x)
            q = xm * xm / 4
            i0 = mp.mpf(1)
            s = mp.mpf(0)
            term = mp.mpf(1)
            h = mp.mpf(0)
            k = 0
            while True:
                k += 1
                term *= q / (k * k)
                h += mp.mpf(1) / k
                i0 += term
                s += term * h
                if term * (h + 1) < mp.mpf(10) ** (-dps) * (i0 + s + 1):
                    break
            val = -(mp.log(xm / 2) + mp.euler) * i0 + s
            return float(val)
    with mp.workdps(30):
        xm = mp.mpf(x)
        term = mp.mpf(1)
        s = mp.mpf(1)
        k = 0
        # alternating asymptotic series; min term ~ exp(-2x), far below
        # double precision for x > 15
        while True:
            k += 1
            term *= -((2 * k - 1) ** 2) / (8 * xm * k)
            if abs(term) < mp.mpf(10) ** (-25):
                break
            s += term
            if k > 2 * x:
                break
        val = mp.sqrt(mp.pi / (2 * xm)) * mp.e ** (-xm) * s
        return float(val)
