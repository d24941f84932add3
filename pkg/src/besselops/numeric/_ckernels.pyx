# cython: boundscheck=False, wraparound=False, cdivision=True, language_level=3
"""Compiled quadrature kernels: tight loops for the Macdonald-function
evaluations that dominate the numeric verification suite.  The numpy
fallback `_kernels_np` implements the same interface."""

import numpy as np

cimport numpy as cnp
from libc.math cimport cos, cosh, exp

NAME = "cython"


def k0_batch(xs, u, w):
    """sum_j w_j exp(-x_i cosh u_j) for each x_i."""
    cdef double[::1] xv = np.ascontiguousarray(xs, dtype=np.float64)
    cdef double[::1] uv = np.ascontiguousarray(u, dtype=np.float64)
    cdef double[::1] wv = np.ascontiguousarray(w, dtype=np.float64)
    cdef Py_ssize_t nx = xv.shape[0], nu = uv.shape[0], i, j
    out = np.empty(nx, dtype=np.float64)
    cu = np.empty(nu, dtype=np.float64)
    cdef double[::1] ov = out
    cdef double[::1] cuv = cu
    cdef double acc, x
    for j in range(nu):
        cuv[j] = cosh(uv[j])
    for i in range(nx):
        x = xv[i]
        acc = 0.0
        for j in range(nu):
            acc += wv[j] * exp(-x * cuv[j])
        ov[i] = acc
    return out


def kitau_batch(taus, double x, u, w):
    """sum_j w_j exp(-x cosh u_j) cos(tau_i u_j) for each tau_i."""
    cdef double[::1] tv = np.ascontiguousarray(taus, dtype=np.float64)
    cdef double[::1] uv = np.ascontiguousarray(u, dtype=np.float64)
    cdef double[::1] wv = np.ascontiguousarray(w, dtype=np.float64)
    cdef Py_ssize_t nt = tv.shape[0], nu = uv.shape[0], i, j
    out = np.empty(nt, dtype=np.float64)
    g = np.empty(nu, dtype=np.float64)
    cdef double[::1] ov = out
    cdef double[::1] gv = g
    cdef double acc, tau
    for j in range(nu):
        gv[j] = wv[j] * exp(-x * cosh(uv[j]))
    for i in range(nt):
        tau = tv[i]
        acc = 0.0
        for j in range(nu):
            acc += gv[j] * cos(tau * uv[j])
        ov[i] = acc
    return out
