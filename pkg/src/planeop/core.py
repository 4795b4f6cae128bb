"""Matrix and vector primitives for 2x2 real operators, plus spectrum classification.

Matrices are plain ``(2, 2)`` float arrays ``[[a, b], [c, d]]`` and vectors are
``(2,)`` arrays. Everything here is a pure function of its inputs.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import NamedTuple, Union

import numpy as np

# Relative tolerances; see det_tolerance / disc_tolerance.
EPS_DET = 1e-12
EPS_DISC = 1e-10


class PlaneOpError(ValueError):
    """Base class for domain errors raised by this package."""


class SingularMatrix(PlaneOpError):
    pass


class DegenerateSpectrum(PlaneOpError):
    """Repeated eigenvalue; the extremal-angle results do not apply."""

    def __init__(self, message, eigenvalue=None):
        super().__init__(message)
        self.eigenvalue = eigenvalue


class ZeroVector(PlaneOpError):
    pass


class NotSymmetric(PlaneOpError):
    pass


def as_matrix(A) -> np.ndarray:
    """Coerce ``A`` to a finite ``(2, 2)`` float array."""
    M = np.asarray(A, dtype=float)
    if M.shape != (2, 2):
        raise ValueError(f"expected a 2x2 matrix, got shape {M.shape}")
    if not np.all(np.isfinite(M)):
        raise ValueError("matrix entries must be finite")
    return M


def as_vector(x) -> np.ndarray:
    v = np.asarray(x, dtype=float)
    if v.shape != (2,):
        raise ValueError(f"expected a 2-vector, got shape {v.shape}")
    if not np.all(np.isfinite(v)):
        raise ValueError("vector entries must be finite")
    return v


def _entries(A):
    M = as_matrix(A)
    return float(M[0, 0]), float(M[0, 1]), float(M[1, 0]), float(M[1, 1])


def rot(theta: float) -> np.ndarray:
    """Counterclockwise rotation by ``theta`` radians."""
    c, s = math.cos(theta), math.sin(theta)
    return np.array([[c, -s], [s, c]])


def det(A) -> float:
    a, b, c, d = _entries(A)
    return a * d - b * c


def trace(A) -> float:
    a, _, _, d = _entries(A)
    return a + d


def inf_norm(A) -> float:
    """Induced infinity norm (max absolute row sum)."""
    a, b, c, d = _entries(A)
    return max(abs(a) + abs(b), abs(c) + abs(d))


def det_tolerance(A) -> float:
    return EPS_DET * max(1.0, inf_norm(A) ** 2)


def disc_scale(A) -> float:
    a, b, c, d = _entries(A)
    return max(1.0, (a + d) ** 2, abs(a * d - b * c))


def check_invertible(A) -> float:
    """Return ``det(A)``, raising :class:`SingularMatrix` when it is numerically zero."""
    a, b, c, d = _entries(A)
    D = a * d - b * c
    norm = max(abs(a) + abs(b), abs(c) + abs(d))
    if abs(D) <= EPS_DET * max(1.0, norm * norm):
        raise SingularMatrix(f"matrix is singular to working precision (det={D:.3g})")
    return D


class Discriminants(NamedTuple):
    """The characteristic discriminant written two algebraically equal ways.

    ``via_trace`` is ``(a+d)^2 - 4(ad-bc)``; ``via_difference`` is
    ``(a-d)^2 + 4bc``. ``term_scale`` is the largest magnitude of the terms
    entering either expression, which bounds their rounding error.
    """

    via_trace: float
    via_difference: float
    term_scale: float


def discriminants(A) -> Discriminants:
    a, b, c, d = _entries(A)
    tr2 = (a + d) ** 2
    diff2 = (a - d) ** 2
    ad, bc = a * d, b * c
    scale = max(tr2, diff2, 4 * abs(ad), 4 * abs(bc))
    return Discriminants(tr2 - 4 * (ad - bc), diff2 + 4 * bc, scale)


@dataclass(frozen=True)
class ComplexPair:
    """Eigenvalues ``re +/- i*im`` with ``im > 0``."""

    re: float
    im: float
    discriminant: float

    kind = "complex"


@dataclass(frozen=True, eq=False)
class RealDistinct:
    """Two distinct real eigenvalues ``lambda1 < lambda2`` with unit eigenvectors.

    ``beta`` is the acute angle between the two eigenlines, in ``(0, pi/2]``.
    """

    lambda1: float
    lambda2: float
    u1: np.ndarray
    u2: np.ndarray
    beta: float
    discriminant: float

    kind = "real"

    @property
    def both_positive(self) -> bool:
        return self.lambda1 > 0

    @property
    def both_negative(self) -> bool:
        return self.lambda2 < 0


SpectrumClass = Union[ComplexPair, RealDistinct]


def _canonical_pair(x, y):
    # largest-magnitude component made positive
    if (y < 0) if abs(y) > abs(x) else (x < 0):
        return -x + 0.0, -y + 0.0
    return x + 0.0, y + 0.0


def _real_eigenvector(a, b, c, d, lam) -> np.ndarray:
    # null vector of [[a-lam, b], [c, d-lam]]: orthogonal to whichever row is larger
    n1 = math.hypot(b, lam - a)
    n2 = math.hypot(lam - d, c)
    x, y, n = (b, lam - a, n1) if n1 >= n2 else (lam - d, c, n2)
    if n == 0.0:
        # A is a multiple of the identity; excluded upstream
        raise DegenerateSpectrum("eigenvector undefined", eigenvalue=lam)
    return np.array(_canonical_pair(x / n, y / n))


def classify(A) -> SpectrumClass:
    """Classify the spectrum of ``A`` by the sign of its characteristic discriminant.

    Raises
    ------
    SingularMatrix
        ``|det A|`` at or below the relative tolerance.
    DegenerateSpectrum
        The discriminant is zero to working precision (repeated eigenvalue).
    """
    a, b, c, d = _entries(A)
    D = check_invertible(A)
    tr = a + d
    disc = (a - d) ** 2 + 4 * b * c
    tol = EPS_DISC * max(1.0, tr * tr, abs(D))
    if disc < -tol:
        return ComplexPair(re=tr / 2, im=math.sqrt(-disc) / 2, discriminant=disc)
    if disc <= tol:
        raise DegenerateSpectrum(
            f"degenerate spectrum: repeated eigenvalue {tr / 2:g}", eigenvalue=tr / 2
        )

    root = math.sqrt(disc)
    # larger-magnitude root first, the other from the product to avoid cancellation
    big = (tr + math.copysign(root, tr)) / 2
    small = D / big
    lam1, lam2 = sorted((big, small))
    u1 = _real_eigenvector(a, b, c, d, lam1)
    u2 = _real_eigenvector(a, b, c, d, lam2)
    beta = math.acos(min(1.0, abs(u1[0] * u2[0] + u1[1] * u2[1])))
    return RealDistinct(lam1, lam2, u1, u2, beta, disc)


def apply(A, x) -> np.ndarray:
    return as_matrix(A) @ as_vector(x)


def signed_angle(x, y) -> float:
    """Counterclockwise angle from ``x`` to ``y`` in ``(-pi, pi]``."""
    x1, x2 = as_vector(x)
    y1, y2 = as_vector(y)
    if (x1 == 0.0 and x2 == 0.0) or (y1 == 0.0 and y2 == 0.0):
        raise ZeroVector("angle undefined for a zero vector")
    ang = math.atan2(x1 * y2 - x2 * y1, x1 * y1 + x2 * y2)
    return math.pi if ang == -math.pi else ang


class SymmetricEigen(NamedTuple):
    lam: float
    mu: float
    e1: np.ndarray
    e2: np.ndarray


def _sym_eig(p: float, q: float, r: float):
    """Scalar core of :func:`eigen_symmetric` for ``[[p, r], [r, q]]``."""
    half_diff = 0.5 * (p - q)
    h = math.hypot(half_diff, r)
    mean = 0.5 * (p + q)
    if h == 0.0:
        return mean, mean, (1.0, 0.0), (0.0, 1.0)
    if r == 0.0:
        return (p, q, (1.0, 0.0), (0.0, 1.0)) if p < q else (q, p, (0.0, 1.0), (1.0, 0.0))

    # larger-magnitude eigenvalue directly, the other through the determinant
    if mean >= 0:
        mu = mean + h
        lam = min((p * q - r * r) / mu, mu)
    else:
        lam = mean - h
        mu = max((p * q - r * r) / lam, lam)

    # axis of mu sits at angle phi with tan(2 phi) = r / half_diff
    phi = 0.5 * math.atan2(r, half_diff)
    c, s = math.cos(phi), math.sin(phi)
    return lam, mu, _canonical_pair(-s, c), _canonical_pair(c, s)


def eigen_symmetric(S) -> SymmetricEigen:
    """Closed-form eigendecomposition of a symmetric 2x2 matrix.

    Returns ``lam <= mu`` with orthonormal eigenvectors ``e1``, ``e2``, each
    with its largest-magnitude component positive. An isotropic matrix gets
    the standard basis.
    """
    p, r12, r21, q = _entries(S)
    scale = max(abs(p), abs(q), abs(r12), abs(r21))
    if abs(r12 - r21) > 8 * math.ulp(scale):
        raise NotSymmetric(f"matrix is not symmetric (off-diagonals {r12!r}, {r21!r})")
    lam, mu, e1, e2 = _sym_eig(p, q, 0.5 * (r12 + r21))
    return SymmetricEigen(lam, mu, np.array(e1), np.array(e2))
