"""Complex polynomials and truncated power series about arbitrary centers.

A polynomial stores coefficients of (z - center)^k with exact trailing zeros
trimmed; the zero polynomial has an empty coefficient array and degree -inf.
A truncated series stores the prefix a_0..a_N of a formal power series and
refuses to fabricate coefficients beyond its truncation order.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from . import backend
from .errors import (
    CenterMismatchError,
    InsufficientOrderError,
    NearPoleError,
    NonFiniteInputError,
)

NEG_INF = float("-inf")


def _as_coeff_array(coeffs) -> np.ndarray:
    arr = np.asarray(coeffs, dtype=np.complex128).reshape(-1).copy()
    if arr.size and not np.all(np.isfinite(arr.view(np.float64))):
        raise NonFiniteInputError("non-finite coefficient")
    return arr


def _check_finite_scalar(z: complex) -> complex:
    z = complex(z)
    if not (np.isfinite(z.real) and np.isfinite(z.imag)):
        raise NonFiniteInputError(f"non-finite scalar {z!r}")
    return z


@dataclass(frozen=True, eq=False)
class Polynomial:
    """Dense complex polynomial in powers of (z - center)."""

    coeffs: np.ndarray
    center: complex = 0j

    def __post_init__(self):
        arr = _as_coeff_array(self.coeffs)
        n = arr.size
        while n > 0 and arr[n - 1] == 0:
            n -= 1
        arr = arr[:n]
        arr.setflags(write=False)
        object.__setattr__(self, "coeffs", arr)
        object.__setattr__(self, "center", _check_finite_scalar(self.center))

    @classmethod
    def zero(cls, center: complex = 0j) -> "Polynomial":
        return cls(np.zeros(0), center)

    @classmethod
    def monomial(cls, degree: int, coeff: complex = 1.0, center: complex = 0j) -> "Polynomial":
        arr = np.zeros(degree + 1, dtype=np.complex128)
        arr[degree] = coeff
        return cls(arr, center)

    @property
    def degree(self):
        """Exact degree; -inf for the zero polynomial."""
        return self.coeffs.size - 1 if self.coeffs.size else NEG_INF

    def is_zero(self) -> bool:
        return self.coeffs.size == 0

    def coeff(self, k: int) -> complex:
        if 0 <= k < self.coeffs.size:
            return complex(self.coeffs[k])
        return 0j

    def __call__(self, z):
        """Evaluate by nested multiplication; z may be a scalar or an array."""
        if np.isscalar(z) or isinstance(z, complex):
            w = complex(z) - self.center
            acc = 0j
            for c in self.coeffs[::-1]:
                acc = acc * w + c
            return acc
        zs = np.asarray(z, dtype=np.complex128)
        return backend.horner_many(self.coeffs, zs - self.center)

    def _require_same_center(self, other: "Polynomial"):
        if self.center != other.center:
            raise CenterMismatchError(
                f"centers differ: {self.center} vs {other.center}; recenter first"
            )

    def __add__(self, other: "Polynomial") -> "Polynomial":
        self._require_same_center(other)
        n = max(self.coeffs.size, other.coeffs.size)
        out = np.zeros(n, dtype=np.complex128)
        out[: self.coeffs.size] = self.coeffs
        out[: other.coeffs.size] += other.coeffs
        return Polynomial(out, self.center)

    def __sub__(self, other: "Polynomial") -> "Polynomial":
        self._require_same_center(other)
        n = max(self.coeffs.size, other.coeffs.size)
        out = np.zeros(n, dtype=np.complex128)
        out[: self.coeffs.size] = self.coeffs
        out[: other.coeffs.size] -= other.coeffs
        return Polynomial(out, self.center)

    def __mul__(self, other):
        if isinstance(other, Polynomial):
            self._require_same_center(other)
            if self.is_zero() or other.is_zero():
                return Polynomial.zero(self.center)
            prod = backend.conv_trunc(
                self.coeffs, other.coeffs, self.coeffs.size + other.coeffs.size - 2
            )
            return Polynomial(prod, self.center)
        return Polynomial(self.coeffs * complex(other), self.center)

    def __rmul__(self, scalar) -> "Polynomial":
        return Polynomial(self.coeffs * complex(scalar), self.center)

    def __neg__(self) -> "Polynomial":
        return Polynomial(-self.coeffs, self.center)

    def shift_to(self, new_center: complex) -> "Polynomial":
        """Recenter by synthetic division; evaluation-preserving, degree-exact."""
        new_center = _check_finite_scalar(new_center)
        if new_center == self.center or self.is_zero():
            return Polynomial(self.coeffs, new_center)
        shifted = backend.shift_center(self.coeffs, new_center - self.center)
        return Polynomial(shifted, new_center)

    def derivative(self) -> "Polynomial":
        if self.coeffs.size <= 1:
            return Polynomial.zero(self.center)
        k = np.arange(1, self.coeffs.size)
        return Polynomial(self.coeffs[1:] * k, self.center)

    def max_abs_coeff(self) -> float:
        return float(np.max(np.abs(self.coeffs))) if self.coeffs.size else 0.0

    def padded(self, length: int) -> np.ndarray:
        out = np.zeros(length, dtype=np.complex128)
        out[: min(length, self.coeffs.size)] = self.coeffs[:length]
        return out

    def to_json(self) -> dict:
        return {
            "center": [self.center.real, self.center.imag],
            "coeffs": [[c.real, c.imag] for c in self.coeffs],
        }

    @classmethod
    def from_json(cls, obj: dict) -> "Polynomial":
        center = complex(*obj.get("center", (0.0, 0.0)))
        return cls(np.array([complex(re, im) for re, im in obj["coeffs"]]), center)

    def __repr__(self):
        return f"Polynomial(degree={self.degree}, center={self.center})"


@dataclass(frozen=True, eq=False)
class TruncatedSeries:
    """Prefix a_0..a_N of a formal power series about a center.

    Requests past the truncation order raise InsufficientOrderError; the
    negative-index convention a_i = 0 for i < 0 is honored.
    """

    coeffs: np.ndarray
    center: complex = 0j

    def __post_init__(self):
        arr = _as_coeff_array(self.coeffs)
        if arr.size == 0:
            raise ValueError("a truncated series needs at least a_0")
        arr.setflags(write=False)
        object.__setattr__(self, "coeffs", arr)
        object.__setattr__(self, "center", _check_finite_scalar(self.center))

    @property
    def order(self) -> int:
        return self.coeffs.size - 1

    def coeff(self, v: int) -> complex:
        if v < 0:
            return 0j
        if v > self.order:
            raise InsufficientOrderError(required=v, available=self.order)
        return complex(self.coeffs[v])

    def coeff_window(self, lo: int, hi: int) -> np.ndarray:
        """a_lo..a_hi inclusive, with zeros at negative indices."""
        if hi > self.order:
            raise InsufficientOrderError(required=hi, available=self.order)
        out = np.zeros(hi - lo + 1, dtype=np.complex128)
        start = max(lo, 0)
        out[start - lo :] = self.coeffs[start : hi + 1]
        return out

    def prefix(self, needed_order: int) -> "TruncatedSeries":
        """The series truncated to needed_order; loud failure past the order."""
        if needed_order > self.order:
            raise InsufficientOrderError(required=needed_order, available=self.order)
        return TruncatedSeries(self.coeffs[: needed_order + 1], self.center)

    def partial_sum(self, k: int) -> Polynomial:
        """S_k: the degree-k partial sum; the zero polynomial for k < 0."""
        if k < 0:
            return Polynomial.zero(self.center)
        if k > self.order:
            raise InsufficientOrderError(required=k, available=self.order)
        return Polynomial(self.coeffs[: k + 1], self.center)

    @classmethod
    def from_polynomial(cls, poly: Polynomial, center: complex, order: int) -> "TruncatedSeries":
        """Taylor coefficients of a polynomial at a center, to a given order.

        Coefficients beyond the degree are exactly zero, so padding is exact.
        """
        shifted = poly.shift_to(center)
        return cls(shifted.padded(order + 1), center)

    def to_json(self) -> dict:
        return {
            "center": [self.center.real, self.center.imag],
            "coeffs": [[c.real, c.imag] for c in self.coeffs],
        }

    @classmethod
    def from_json(cls, obj: dict) -> "TruncatedSeries":
        center = complex(*obj.get("center", (0.0, 0.0)))
        return cls(np.array([complex(re, im) for re, im in obj["coeffs"]]), center)

    def __repr__(self):
        return f"TruncatedSeries(order={self.order}, center={self.center})"


def taylor_of_rational(
    num: Polynomial, den: Polynomial, center: complex, order: int,
    pole_tol: float = 1e-12,
) -> TruncatedSeries:
    """Taylor prefix b_0..b_order of num/den at a center.

    The coefficients satisfy conv(den, b) == num through the requested order.
    Raises NearPoleError when the denominator vanishes at the center within
    the evaluation tolerance policy.
    """
    center = _check_finite_scalar(center)
    n = num.shift_to(center)
    d = den.shift_to(center)
    if d.is_zero():
        raise NearPoleError("denominator is identically zero")
    dval = d(center)
    if abs(dval) < pole_tol * max(1.0, abs(n(center))):
        raise NearPoleError(f"denominator ~ 0 at center {center}: |den|={abs(dval):.3e}")
    coeffs = backend.rational_taylor(n.coeffs, d.coeffs, order)
    return TruncatedSeries(coeffs, center)
