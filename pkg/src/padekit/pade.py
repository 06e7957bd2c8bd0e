"""Existence tests and construction of Pade approximants.

Existence of [p/q] at a center is decided by a q x q Hankel determinant of
shifted Taylor coefficients, reported relative to the product of the row
norms (Hadamard scale) so the test is invariant under coefficient scaling.
Construction runs two independent routes: cofactor expansion of the explicit
determinant formulas for numerator and denominator, and a coefficient-matching
linear solve. Route agreement is the toolkit's main self-check.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

import numpy as np

from . import backend
from .errors import (
    EmptyRegionError,
    InsufficientOrderError,
    NotInExistenceClassError,
    SingularSystemError,
)
from .series import Polynomial, TruncatedSeries

DEFAULT_TOL_REL = 1e-9
WARN_FLOOR = 1e-12
JACOBI_MAX_Q = 12

NEAR_DEGENERATE = "near-degenerate"


@dataclass(frozen=True)
class PadeIndex:
    p: int
    q: int

    def __post_init__(self):
        if self.p < 0 or self.q < 0:
            raise ValueError(f"Pade index must be nonnegative, got ({self.p}, {self.q})")

    def as_pair(self):
        return [self.p, self.q]


@dataclass(frozen=True)
class PadeIndexFamily:
    """Finite index family with a strictly-p-increasing witness sequence."""

    members: frozenset
    witness: tuple

    def __post_init__(self):
        if not self.witness:
            raise ValueError("witness sequence must be nonempty")
        for idx in self.witness:
            if idx not in self.members:
                raise ValueError(f"witness index {idx} not among members")
        ps = [idx.p for idx in self.witness]
        if any(b <= a for a, b in zip(ps, ps[1:])):
            raise ValueError("witness p-components must be strictly increasing")

    @classmethod
    def from_pairs(cls, members, witness=None) -> "PadeIndexFamily":
        """Build from (p, q) pairs; without an explicit witness, take members
        sorted by (p, q) keeping the first of each p (strictly increasing)."""
        mem = frozenset(PadeIndex(p, q) for p, q in members)
        if witness is not None:
            wit = tuple(PadeIndex(p, q) for p, q in witness)
        else:
            wit, last_p = [], -1
            for idx in sorted(mem, key=lambda i: (i.p, i.q)):
                if idx.p > last_p:
                    wit.append(idx)
                    last_p = idx.p
            wit = tuple(wit)
        return cls(mem, wit)

    def to_json(self) -> dict:
        return {
            "members": sorted(i.as_pair() for i in self.members),
            "witness": [i.as_pair() for i in self.witness],
        }

    @classmethod
    def from_json(cls, obj: dict) -> "PadeIndexFamily":
        return cls.from_pairs(obj["members"], obj.get("witness"))


@dataclass(frozen=True)
class HankelReport:
    """Existence verdict for one (p, q) cell under the tolerance policy."""

    p: int
    q: int
    det: complex
    scale: float
    member: bool
    warning: Optional[str] = None

    def to_json(self) -> dict:
        return {
            "p": self.p,
            "q": self.q,
            "det": [self.det.real, self.det.imag],
            "scale": self.scale,
            "member": self.member,
            "warning": self.warning,
        }


@dataclass(frozen=True)
class RationalApproximant:
    """[p/q] approximant: num/den about a common center, den(center) = 1."""

    num: Polynomial
    den: Polynomial
    p: int
    q: int
    normalized: bool = True

    def __post_init__(self):
        if self.num.center != self.den.center:
            raise ValueError("numerator and denominator centers differ")
        if self.num.degree > self.p or self.den.degree > self.q:
            raise ValueError(
                f"degrees ({self.num.degree}, {self.den.degree}) exceed index "
                f"({self.p}, {self.q})"
            )

    @property
    def center(self) -> complex:
        return self.num.center

    def to_json(self) -> dict:
        return {
            "p": self.p,
            "q": self.q,
            "num": self.num.to_json(),
            "den": self.den.to_json(),
            "normalized": self.normalized,
        }


def hankel_matrix(s: TruncatedSeries, idx: PadeIndex) -> np.ndarray:
    """The q x q matrix with entry (r, c) = a_{p-q+1+r+c}, zeros at negative index."""
    p, q = idx.p, idx.q
    if q < 1:
        raise ValueError("Hankel matrix requires q >= 1")
    window = s.coeff_window(p - q + 1, p + q - 1)  # raises InsufficientOrder
    take = np.add.outer(np.arange(q), np.arange(q))
    return window[take]


def _hadamard_scale(mat: np.ndarray) -> float:
    if mat.shape[0] == 0:
        return 1.0
    row_norms = np.sqrt((np.abs(mat) ** 2).sum(axis=1))
    return float(np.prod(row_norms))


def membership(
    s: TruncatedSeries, idx: PadeIndex, tol_rel: float = DEFAULT_TOL_REL
) -> HankelReport:
    """Decide existence of [p/q] for this series under the tolerance policy.

    member iff |det| > tol_rel * scale; determinants in the band
    (WARN_FLOOR * scale, tol_rel * scale] are flagged near-degenerate.
    """
    p, q = idx.p, idx.q
    if q == 0:
        return HankelReport(p, q, det=1.0 + 0j, scale=1.0, member=True)
    mat = hankel_matrix(s, idx)
    det = backend.lu_det(mat)
    scale = _hadamard_scale(mat)
    member = abs(det) > tol_rel * scale
    warning = None
    if not member and abs(det) > WARN_FLOOR * scale:
        warning = NEAR_DEGENERATE
    return HankelReport(p, q, det=det, scale=scale, member=member, warning=warning)


def _partial_sum_approximant(s: TruncatedSeries, p: int) -> RationalApproximant:
    return RationalApproximant(
        num=s.partial_sum(p),
        den=Polynomial(np.ones(1), s.center),
        p=p,
        q=0,
    )


def pade_jacobi(
    s: TruncatedSeries, idx: PadeIndex, tol_rel: float = DEFAULT_TOL_REL
) -> RationalApproximant:
    """Reference route: cofactor expansion of the explicit determinant formulas.

    Numerator and denominator are (q+1) x (q+1) determinants sharing the same
    q coefficient rows; expansion along the symbolic first row reuses the q+1
    numeric minors for both. Restricted to q <= JACOBI_MAX_Q by design; the
    linear-solve route is the production path.
    """
    p, q = idx.p, idx.q
    if q > JACOBI_MAX_Q:
        raise ValueError(f"jacobi route is restricted to q <= {JACOBI_MAX_Q}")
    if q == 0:
        return _partial_sum_approximant(s, p)
    if s.order < p + q:
        raise InsufficientOrderError(required=p + q, available=s.order)
    report = membership(s, idx, tol_rel)
    if not report.member:
        raise NotInExistenceClassError(report)

    # Coefficient rows r = 1..q: entry (r-1, c) = a_{p-q+r+c}, c = 0..q.
    window = s.coeff_window(p - q + 1, p + q)
    take = np.add.outer(np.arange(q), np.arange(q + 1))
    rows = window[take]

    minors = np.empty(q + 1, dtype=np.complex128)
    cols = np.arange(q + 1)
    for c in range(q + 1):
        minors[c] = backend.lu_det(np.ascontiguousarray(rows[:, cols != c]))

    signs = np.where(np.arange(q + 1) % 2 == 0, 1.0, -1.0)

    den_coeffs = np.zeros(q + 1, dtype=np.complex128)
    for c in range(q + 1):
        den_coeffs[q - c] = signs[c] * minors[c]

    num_coeffs = np.zeros(p + 1, dtype=np.complex128)
    for c in range(q + 1):
        k = p - q + c  # order of the partial sum in column c
        if k < 0:
            continue
        num_coeffs[q - c : q - c + k + 1] += signs[c] * minors[c] * s.coeffs[: k + 1]

    b_at_center = den_coeffs[0]  # equals (-1)^q times the Hankel determinant
    return RationalApproximant(
        num=Polynomial(num_coeffs / b_at_center, s.center),
        den=Polynomial(den_coeffs / b_at_center, s.center),
        p=p,
        q=q,
    )


def pade_linear_solve(
    s: TruncatedSeries, idx: PadeIndex, tol_rel: float = DEFAULT_TOL_REL
) -> RationalApproximant:
    """Production route: solve the coefficient-matching system.

    Denominator coefficients solve the Hankel system that cancels orders
    p+1..p+q of den*f; the numerator is den*f truncated at degree p.
    """
    p, q = idx.p, idx.q
    if q == 0:
        return _partial_sum_approximant(s, p)
    if s.order < p + q:
        raise InsufficientOrderError(required=p + q, available=s.order)

    window = s.coeff_window(p - q + 1, p + q)  # w[j] = a_{p-q+1+j}
    take = (q - 1) + np.subtract.outer(np.arange(q), np.arange(q))
    mat = np.ascontiguousarray(window[take])  # mat[i, j] = a_{p+i-j}
    rhs = -window[q : 2 * q]  # -(a_{p+1} .. a_{p+q})

    scale = _hadamard_scale(mat)
    x, det = backend.lu_solve_det(mat, rhs)
    if x is None or abs(det) <= tol_rel * scale:
        raise SingularSystemError(p, q, det, scale)

    den_coeffs = np.concatenate([[1.0 + 0j], x])
    num_coeffs = backend.conv_trunc(den_coeffs, s.coeffs[: p + 1], p)
    return RationalApproximant(
        num=Polynomial(num_coeffs, s.center),
        den=Polynomial(den_coeffs, s.center),
        p=p,
        q=q,
    )


def separation_bound(r: RationalApproximant, region) -> float:
    """min over the region's samples of |num(z)|^2 + |den(z)|^2."""
    pts = np.asarray(region.points, dtype=np.complex128)
    if pts.size == 0:
        raise EmptyRegionError(f"region {getattr(region, 'label', '?')!r} is empty")
    a = backend.horner_many(r.num.coeffs, pts - r.center)
    b = backend.horner_many(r.den.coeffs, pts - r.center)
    return float(np.min(np.abs(a) ** 2 + np.abs(b) ** 2))


def approximant_rel_diff(r1: RationalApproximant, r2: RationalApproximant) -> float:
    """Max coefficient difference between two approximants, relative to the
    largest coefficient magnitude across both."""
    if r1.center != r2.center:
        raise ValueError("approximants have different centers")
    n = max(r1.num.coeffs.size, r2.num.coeffs.size, 1)
    m = max(r1.den.coeffs.size, r2.den.coeffs.size, 1)
    dn = np.abs(r1.num.padded(n) - r2.num.padded(n))
    dd = np.abs(r1.den.padded(m) - r2.den.padded(m))
    mags = [r1.num.max_abs_coeff(), r2.num.max_abs_coeff(),
            r1.den.max_abs_coeff(), r2.den.max_abs_coeff()]
    ref = max(mags)
    if ref == 0.0:
        return 0.0
    return float(max(dn.max(), dd.max()) / ref)


def taylor_match_error(r: RationalApproximant, s: TruncatedSeries) -> float:
    """Max |b_v - a_v| over v = 0..p+q: the defining coefficient-matching property."""
    from .series import taylor_of_rational

    order = r.p + r.q
    expanded = taylor_of_rational(r.num, r.den, r.center, order)
    return float(np.max(np.abs(expanded.coeffs - s.coeff_window(0, order))))
