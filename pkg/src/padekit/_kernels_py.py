"""Pure numpy/Python kernel fallback.

Mirrors the signatures of the compiled module ``padekit._kernels_c``.
Array arguments are 1-D complex128 ndarrays; callers own validation.
"""

import numpy as np

BACKEND_NAME = "python"


def horner_many(coeffs: np.ndarray, w: np.ndarray) -> np.ndarray:
    """Evaluate sum(coeffs[k] * w**k) by nested multiplication, vectorized over w."""
    if len(coeffs) == 0:
        return np.zeros(len(w), dtype=np.complex128)
    acc = np.full(len(w), coeffs[-1], dtype=np.complex128)
    for k in range(len(coeffs) - 2, -1, -1):
        acc *= w
        acc += coeffs[k]
    return acc


def shift_center(coeffs: np.ndarray, delta: complex) -> np.ndarray:
    """Taylor shift by repeated synthetic division.

    Returns b with sum(b[k] * u**k) == sum(coeffs[k] * (u + delta)**k).
    """
    b = list(coeffs)
    n = len(b)
    d = complex(delta)
    for k in range(n - 1):
        for j in range(n - 2, k - 1, -1):
            b[j] = b[j] + d * b[j + 1]
    return np.array(b, dtype=np.complex128)


def rational_taylor(num: np.ndarray, den: np.ndarray, order: int) -> np.ndarray:
    """Coefficients b_0..b_order of num/den via the convolution recurrence.

    den[0] must be nonzero (callers enforce the tolerance policy).
    """
    dn = list(den)
    nm = list(num)
    d0 = dn[0]
    b = []
    for k in range(order + 1):
        s = nm[k] if k < len(nm) else 0j
        for u in range(1, min(k, len(dn) - 1) + 1):
            s -= dn[u] * b[k - u]
        b.append(s / d0)
    return np.array(b, dtype=np.complex128)


def conv_trunc(a: np.ndarray, b: np.ndarray, order: int) -> np.ndarray:
    """Product coefficients of two coefficient vectors, truncated at degree order."""
    if len(a) == 0 or len(b) == 0:
        return np.zeros(0, dtype=np.complex128)
    full = np.convolve(a, b)
    return full[: order + 1]


def lu_det(mat: np.ndarray) -> complex:
    """Determinant by row-pivoted triangular factorization."""
    if mat.shape[0] == 0:
        return 1.0 + 0j
    return complex(np.linalg.det(mat))


def lu_solve_det(mat: np.ndarray, rhs: np.ndarray):
    """Solve mat @ x = rhs; returns (x, det). det is reported even when tiny;
    an exactly singular factorization yields (None, 0)."""
    det = lu_det(mat)
    try:
        x = np.linalg.solve(mat, rhs)
    except np.linalg.LinAlgError:
        return None, 0j
    return x, det
