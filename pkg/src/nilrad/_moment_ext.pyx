# cython: boundscheck=False, wraparound=False, cdivision=True, language_level=3
"""Compiled kernel for the barycenter objective; same contract as _moment_py."""

import numpy as np
from libc.math cimport exp


def objective(const double[:, ::1] beta, const double[::1] logw0, const double[::1] x):
    cdef Py_ssize_t N = beta.shape[0], n = beta.shape[1], j, r
    cdef double zmax, s, proj, f
    z_arr = np.empty(N)
    d_arr = np.zeros(n)
    g_arr = np.zeros(n)
    cdef double[::1] z = z_arr
    cdef double[::1] d = d_arr
    cdef double[::1] g = g_arr

    for j in range(N):
        s = 0.0
        for r in range(n):
            s += beta[j, r] * x[r]
        z[j] = logw0[j] + 2.0 * s
    zmax = z[0]
    for j in range(1, N):
        if z[j] > zmax:
            zmax = z[j]
    s = 0.0
    for j in range(N):
        z[j] = exp(z[j] - zmax)
        s += z[j]
    for j in range(N):
        z[j] /= s
        for r in range(n):
            d[r] += z[j] * beta[j, r]
    for j in range(N):
        proj = 0.0
        for r in range(n):
            proj += (beta[j, r] - d[r]) * d[r]
        for r in range(n):
            g[r] += 4.0 * z[j] * proj * (beta[j, r] - d[r])
    f = 0.0
    for r in range(n):
        f += d[r] * d[r]
    return f, g_arr, d_arr
