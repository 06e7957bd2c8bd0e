# cython: boundscheck=False, wraparound=False, cdivision=True, language_level=3
"""Compiled kernels: Horner evaluation, Taylor shift, series division,
truncated convolution, and small pivoted complex LU.

Signatures mirror padekit._kernels_py; padekit.backend picks one at import.
"""

import numpy as np

BACKEND_NAME = "compiled"


cdef void _horner(const double complex[::1] c, const double complex[::1] w,
                  double complex[::1] out) noexcept nogil:
    cdef Py_ssize_t n = c.shape[0]
    cdef Py_ssize_t m = w.shape[0]
    cdef Py_ssize_t i, k
    cdef double complex acc
    for i in range(m):
        acc = c[n - 1]
        for k in range(n - 2, -1, -1):
            acc = acc * w[i] + c[k]
        out[i] = acc


def horner_many(coeffs, w):
    """Evaluate sum(coeffs[k] * w**k) by nested multiplication, vectorized over w."""
    cdef double complex[::1] cv = np.ascontiguousarray(coeffs, dtype=np.complex128)
    cdef double complex[::1] wv = np.ascontiguousarray(w, dtype=np.complex128)
    out = np.zeros(wv.shape[0], dtype=np.complex128)
    if cv.shape[0] == 0 or wv.shape[0] == 0:
        return out
    cdef double complex[::1] ov = out
    _horner(cv, wv, ov)
    return out


def shift_center(coeffs, delta):
    """Taylor shift by repeated synthetic division.

    Returns b with sum(b[k] * u**k) == sum(coeffs[k] * (u + delta)**k).
    """
    b = np.array(coeffs, dtype=np.complex128, copy=True)
    cdef double complex[::1] bv = b
    cdef double complex d = delta
    cdef Py_ssize_t n = bv.shape[0]
    cdef Py_ssize_t k, j
    with nogil:
        for k in range(n - 1):
            for j in range(n - 2, k - 1, -1):
                bv[j] = bv[j] + d * bv[j + 1]
    return b


def rational_taylor(num, den, order):
    """Coefficients b_0..b_order of num/den via the convolution recurrence.

    den[0] must be nonzero (callers enforce the tolerance policy).
    """
    cdef double complex[::1] nm = np.ascontiguousarray(num, dtype=np.complex128)
    cdef double complex[::1] dn = np.ascontiguousarray(den, dtype=np.complex128)
    out = np.zeros(order + 1, dtype=np.complex128)
    cdef double complex[::1] b = out
    cdef double complex d0 = dn[0]
    cdef Py_ssize_t ln = nm.shape[0], ld = dn.shape[0]
    cdef Py_ssize_t k, u, umax
    cdef double complex s
    with nogil:
        for k in range(order + 1):
            s = nm[k] if k < ln else 0
            umax = k if k < ld - 1 else ld - 1
            for u in range(1, umax + 1):
                s = s - dn[u] * b[k - u]
            b[k] = s / d0
    return out


def conv_trunc(a, b, order):
    """Product coefficients of two coefficient vectors, truncated at degree order."""
    cdef double complex[::1] av = np.ascontiguousarray(a, dtype=np.complex128)
    cdef double complex[::1] bv = np.ascontiguousarray(b, dtype=np.complex128)
    cdef Py_ssize_t la = av.shape[0], lb = bv.shape[0]
    if la == 0 or lb == 0:
        return np.zeros(0, dtype=np.complex128)
    cdef Py_ssize_t n = la + lb - 1
    if n > order + 1:
        n = order + 1
    out = np.zeros(n, dtype=np.complex128)
    cdef double complex[::1] ov = out
    cdef Py_ssize_t i, j
    with nogil:
        for i in range(la):
            for j in range(lb):
                if i + j < n:
                    ov[i + j] = ov[i + j] + av[i] * bv[j]
    return out


cdef int _lu_factor(double complex[:, ::1] a, Py_ssize_t[::1] piv,
                    double complex* det) noexcept nogil:
    """In-place row-pivoted LU; returns 0 on success, -1 on an exact zero pivot.
    det receives the determinant (0 on singularity)."""
    cdef Py_ssize_t n = a.shape[0]
    cdef Py_ssize_t i, j, k, imax
    cdef double best, mag
    cdef double complex tmp, mult, dacc = 1
    for k in range(n):
        imax = k
        best = abs(a[k, k])
        for i in range(k + 1, n):
            mag = abs(a[i, k])
            if mag > best:
                best = mag
                imax = i
        piv[k] = imax
        if imax != k:
            for j in range(n):
                tmp = a[k, j]
                a[k, j] = a[imax, j]
                a[imax, j] = tmp
            dacc = -dacc
        if a[k, k] == 0:
            det[0] = 0
            return -1
        dacc = dacc * a[k, k]
        for i in range(k + 1, n):
            mult = a[i, k] / a[k, k]
            a[i, k] = mult
            for j in range(k + 1, n):
                a[i, j] = a[i, j] - mult * a[k, j]
    det[0] = dacc
    return 0


def lu_det(mat):
    """Determinant by row-pivoted triangular factorization."""
    a = np.array(mat, dtype=np.complex128, copy=True, order="C")
    cdef Py_ssize_t n = a.shape[0]
    if n == 0:
        return 1.0 + 0j
    piv = np.zeros(n, dtype=np.intp)
    cdef double complex[:, ::1] av = a
    cdef Py_ssize_t[::1] pv = piv
    cdef double complex det = 0
    _lu_factor(av, pv, &det)
    return complex(det)


def lu_solve_det(mat, rhs):
    """Solve mat @ x = rhs; returns (x, det). det is reported even when tiny;
    an exactly singular factorization yields (None, 0)."""
    a = np.array(mat, dtype=np.complex128, copy=True, order="C")
    x = np.array(rhs, dtype=np.complex128, copy=True)
    cdef Py_ssize_t n = a.shape[0]
    if n == 0:
        return x, 1.0 + 0j
    piv = np.zeros(n, dtype=np.intp)
    cdef double complex[:, ::1] av = a
    cdef Py_ssize_t[::1] pv = piv
    cdef double complex[::1] xv = x
    cdef double complex det = 0
    cdef Py_ssize_t i, j
    cdef double complex tmp, s
    if _lu_factor(av, pv, &det) != 0:
        return None, 0j
    with nogil:
        for i in range(n):
            if pv[i] != i:
                tmp = xv[i]
                xv[i] = xv[pv[i]]
                xv[pv[i]] = tmp
        for i in range(n):  # forward: L has unit diagonal
            s = xv[i]
            for j in range(i):
                s = s - av[i, j] * xv[j]
            xv[i] = s
        for i in range(n - 1, -1, -1):  # back substitution
            s = xv[i]
            for j in range(i + 1, n):
                s = s - av[i, j] * xv[j]
            xv[i] = s / av[i, i]
    return x, complex(det)
