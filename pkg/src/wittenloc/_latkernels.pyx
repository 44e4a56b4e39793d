# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled lattice-summation kernels.

Hot loops for the absolutely convergent lattice sums and products.  The
NumPy fallback in ``_latkernels_py`` implements the same interfaces.
"""

import numpy as np

cimport cython
from libc.complex cimport cexp


def power_sums(points, exponents):
    """Sum of lam**-k over the points, for each k in exponents."""
    cdef double complex[::1] pts = np.ascontiguousarray(points, dtype=np.complex128)
    exps = sorted(set(int(k) for k in exponents))
    if not exps:
        return {}
    cdef long[::1] ks = np.asarray(exps, dtype=np.int64)
    cdef Py_ssize_t nk = ks.shape[0]
    cdef Py_ssize_t n = pts.shape[0]
    cdef long kmax = ks[nk - 1]
    acc_arr = np.zeros(nk, dtype=np.complex128)
    cdef double complex[::1] acc = acc_arr
    cdef double complex inv, cur
    cdef Py_ssize_t i, j
    cdef long k
    for i in range(n):
        inv = 1.0 / pts[i]
        cur = 1.0
        j = 0
        for k in range(1, kmax + 1):
            cur = cur * inv
            if k == ks[j]:
                acc[j] = acc[j] + cur
                j += 1
                if j == nk:
                    break
    return {int(ks[j]): complex(acc_arr[j]) for j in range(nk)}


def weighted_power_sums(points, weights, exponents):
    """Like power_sums but each term carries a real weight."""
    cdef double complex[::1] pts = np.ascontiguousarray(points, dtype=np.complex128)
    cdef double[::1] w = np.ascontiguousarray(weights, dtype=np.float64)
    exps = sorted(set(int(k) for k in exponents))
    if not exps:
        return {}
    cdef long[::1] ks = np.asarray(exps, dtype=np.int64)
    cdef Py_ssize_t nk = ks.shape[0]
    cdef Py_ssize_t n = pts.shape[0]
    cdef long kmax = ks[nk - 1]
    acc_arr = np.zeros(nk, dtype=np.complex128)
    cdef double complex[::1] acc = acc_arr
    cdef double complex inv, cur
    cdef Py_ssize_t i, j
    cdef long k
    for i in range(n):
        inv = 1.0 / pts[i]
        cur = 1.0
        j = 0
        for k in range(1, kmax + 1):
            cur = cur * inv
            if k == ks[j]:
                acc[j] = acc[j] + cur * w[i]
                j += 1
                if j == nk:
                    break
    return {int(ks[j]): complex(acc_arr[j]) for j in range(nk)}


def sigma_product(z, points):
    """Product of (1 - z/lam) * exp(z/lam + z^2/(2 lam^2)) over the points."""
    cdef double complex[::1] pts = np.ascontiguousarray(points, dtype=np.complex128)
    cdef double complex zz = z
    cdef double complex prod = 1.0
    cdef double complex w
    cdef Py_ssize_t i
    cdef Py_ssize_t n = pts.shape[0]
    for i in range(n):
        w = zz / pts[i]
        prod = prod * (1.0 - w) * cexp(w + 0.5 * w * w)
    return complex(prod)
