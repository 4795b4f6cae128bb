"""Orbits of area-preserving operators with complex spectrum and their invariant ellipses.

When ``det A = 1`` and the eigenvalues are ``exp(+-i theta)``, the real and
imaginary parts of a complex eigenvector give a basis ``(u, v)`` in which
``A`` is the rotation by ``theta``. Each orbit therefore stays on the ellipse
``|P x|^2 = r^2`` with ``P`` the change to ``(u, v)`` coordinates.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Optional

import numpy as np

from .core import (
    PlaneOpError,
    ZeroVector,
    _entries,
    as_vector,
    classify,
    eigen_symmetric,
    rot,
)

DET_TOL = 1e-9
Q_MAX = 10_000
ANGLE_TOL = 1e-9
RECURRENCE_TOL = 1e-9


class NotComplexSpectrum(PlaneOpError):
    pass


class DetNotOne(PlaneOpError):
    pass


class SingularBasis(PlaneOpError):
    pass


@dataclass(frozen=True, eq=False)
class InvariantBasis:
    """Basis ``u, v`` in which ``A`` acts as ``rot(theta)``.

    ``P`` maps standard coordinates to ``(u, v)`` coordinates, so
    ``P @ A @ inv(P) == rot(theta)``.
    """

    u: np.ndarray
    v: np.ndarray
    theta: float
    P: np.ndarray

    def conjugacy_residual(self, A) -> float:
        M = self.P @ np.asarray(A, dtype=float) @ np.linalg.inv(self.P)
        return float(np.max(np.abs(M - rot(self.theta))))


def _check_domain(A):
    a, b, c, d = _entries(A)
    D = a * d - b * c
    if abs(D - 1) > DET_TOL:
        raise DetNotOne(
            f"complex spectrum with det=1 required (det={D:.12g}); "
            "rescale by 1/sqrt(det) when det > 0"
        )
    if classify(A).kind != "complex":
        raise NotComplexSpectrum("complex spectrum with det=1 required (spectrum is real)")
    return a, b, c, d


def invariant_basis(A, normalization: Optional[complex] = None) -> InvariantBasis:
    """Build the rotation basis from the eigenvector of ``exp(i theta)``.

    The eigenvector ``z`` is scaled to ``|z|^2 = 2``, so a pure rotation
    gets an orthonormal ``u, v``, and its larger component is made real and
    positive. ``normalization`` multiplies it by an extra complex factor;
    any nonzero value gives an equally valid basis.
    """
    a, b, c, d = _check_domain(A)
    theta = math.acos(max(-1.0, min(1.0, (a + d) / 2)))
    w = complex(math.cos(theta), math.sin(theta))

    # null vector of [[a-w, b], [c, d-w]] from its larger row
    z1 = np.array([b, w - a], dtype=complex)
    z2 = np.array([w - d, c], dtype=complex)
    z = z1 if np.linalg.norm(z1) >= np.linalg.norm(z2) else z2
    z = z * (math.sqrt(2.0) / np.linalg.norm(z))
    k = int(np.argmax(np.abs(z)))
    z = z * (abs(z[k]) / z[k])
    if normalization is not None:
        if normalization == 0:
            raise ValueError("normalization must be nonzero")
        z = z * complex(normalization)

    u = z.real.copy()
    # A z = w z gives A u = cos u - sin Im z and A Im z = sin u + cos Im z,
    # so v = -Im z makes the matrix in (u, v) the counterclockwise rot(theta)
    v = -z.imag + 0.0
    basis = np.column_stack([u, v])
    if abs(np.linalg.det(basis)) <= 1e-12 * max(1.0, float(np.max(np.abs(basis))) ** 2):
        raise SingularBasis("eigenvector real and imaginary parts are dependent")
    P = np.linalg.inv(basis)
    M = P @ np.array([[a, b], [c, d]]) @ basis
    if M[1, 0] < 0:
        v = -v
        basis[:, 1] = v
        P = np.linalg.inv(basis)
    return InvariantBasis(u, v, theta, P)


@dataclass(frozen=True, eq=False)
class ConicInvariants:
    """Quadratic form ``Af = P.T @ P`` with trace ``S`` and determinant ``delta``."""

    Af: np.ndarray
    S: float
    delta: float


def conic_invariants(P) -> ConicInvariants:
    p, q, s, t = _entries(P)
    detP = p * t - q * s
    if abs(detP) <= 1e-12 * max(1.0, max(abs(p), abs(q), abs(s), abs(t)) ** 2):
        raise SingularBasis("change-of-basis matrix is singular")
    off = p * q + s * t
    Af = np.array([[p * p + s * s, off], [off, q * q + t * t]])
    return ConicInvariants(Af, float(Af[0, 0] + Af[1, 1]), float(Af[0, 0] * Af[1, 1] - off * off))


@dataclass(frozen=True, eq=False)
class EllipseReport:
    """The invariant ellipse ``x^T Af x = r2`` through a starting point.

    ``lambda_p <= mu_p`` are the eigenvalues of ``Af``; the semi-axes are
    ``a = r/sqrt(lambda_p)`` along ``major_axis`` and ``b = r/sqrt(mu_p)``
    along ``minor_axis``. ``Delta = -delta * r2`` is the bordered determinant.
    """

    Af: np.ndarray
    S: float
    delta: float
    Delta: float
    lambda_p: float
    mu_p: float
    a: float
    b: float
    r2: float
    major_axis: np.ndarray
    minor_axis: np.ndarray

    @property
    def eccentricity(self) -> float:
        return math.sqrt(max(0.0, 1 - (self.b / self.a) ** 2))

    def form(self, points) -> np.ndarray:
        """Evaluate ``x^T Af x`` for one point or an ``(n, 2)`` array."""
        X = np.asarray(points, dtype=float)
        return np.einsum("...i,ij,...j->...", X, self.Af, X)

    def residual(self, points) -> np.ndarray:
        """Relative deviation ``(x^T Af x - r2) / r2``."""
        return (self.form(points) - self.r2) / self.r2

    def outline(self, segments: int = 256) -> np.ndarray:
        """Closed polyline of ``segments + 1`` points along the ellipse."""
        s = 2 * np.pi * np.arange(segments + 1) / segments
        return (
            np.outer(self.a * np.cos(s), self.major_axis)
            + np.outer(self.b * np.sin(s), self.minor_axis)
        )


def ellipse_through(A, x0, normalization: Optional[complex] = None) -> EllipseReport:
    x0 = as_vector(x0)
    if not np.any(x0):
        raise ZeroVector("starting point must be nonzero")
    basis = invariant_basis(A, normalization)
    inv = conic_invariants(basis.P)
    xp = basis.P @ x0
    r2 = float(xp @ xp)
    lam_p, mu_p, major, minor = eigen_symmetric(inv.Af)
    return EllipseReport(
        Af=inv.Af,
        S=inv.S,
        delta=inv.delta,
        Delta=-inv.delta * r2,
        lambda_p=lam_p,
        mu_p=mu_p,
        a=math.sqrt(r2 / lam_p),
        b=math.sqrt(r2 / mu_p),
        r2=r2,
        major_axis=major,
        minor_axis=minor,
    )


@dataclass(frozen=True, eq=False)
class OrbitReport:
    """``points[k] = A^k x0``; ``period`` is the smallest recurrence found, if any."""

    points: np.ndarray
    period: Optional[int]
    theta_over_2pi: float


def find_period(theta: float, q_max: int = Q_MAX, tol: float = ANGLE_TOL) -> Optional[int]:
    """Smallest ``q <= q_max`` with ``q * theta`` within ``tol`` of a multiple of ``2 pi``."""
    q = np.arange(1, q_max + 1)
    turns = q * theta / (2 * np.pi)
    err = 2 * np.pi * np.abs(turns - np.round(turns))
    hits = np.nonzero(err <= tol)[0]
    return int(q[hits[0]]) if hits.size else None


def orbit(A, x0, n: int, q_max: int = Q_MAX) -> OrbitReport:
    """Iterate ``A`` from ``x0`` for ``n`` points and detect a finite period.

    A period ``q`` is reported only when ``q * theta`` is a multiple of
    ``2 pi`` to within ``ANGLE_TOL`` and ``A^q x0`` returns to ``x0`` to
    within ``RECURRENCE_TOL`` relative. Candidates are limited to
    ``q <= min(n, q_max)``.
    """
    if n < 1:
        raise ValueError("n must be at least 1")
    x0 = as_vector(x0)
    if not np.any(x0):
        raise ZeroVector("starting point must be nonzero")
    a, b, c, d = _check_domain(A)
    theta = math.acos(max(-1.0, min(1.0, (a + d) / 2)))

    pts = np.empty((n + 1, 2))
    x, y = float(x0[0]), float(x0[1])
    for k in range(n + 1):
        pts[k] = x, y
        x, y = a * x + b * y, c * x + d * y

    period = None
    limit = min(n, q_max)
    q = find_period(theta, limit) if limit >= 1 else None
    if q is not None:
        if np.linalg.norm(pts[q] - x0) <= RECURRENCE_TOL * np.linalg.norm(x0):
            period = q
    return OrbitReport(pts[:n], period, theta / (2 * math.pi))
