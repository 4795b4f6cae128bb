"""Polar decomposition ``A = O B`` of a 2x2 operator, its norm and length distortion."""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Optional

import numpy as np

from .core import PlaneOpError, _entries, _sym_eig, check_invertible

# |lambda - 1| below this counts as an exactly length-preserving axis
ISOMETRY_TOL = 1e-12
BOUND_TOL = 1e-10


class ReflectionCase(PlaneOpError):
    """``det(A) < 0``: the orthogonal factor is a reflection, which is not handled."""


class Indeterminate(PlaneOpError):
    pass


@dataclass(frozen=True, eq=False)
class PolarForm:
    """Factors of ``A = O @ B``.

    ``O`` is the rotation by ``alpha``; ``B`` is symmetric positive definite
    with eigenvalues ``sqrt_lambda <= sqrt_mu`` along the positively oriented
    orthonormal directions ``e1``, ``e2``. ``lam``/``mu`` are the eigenvalues of ``A.T @ A``.
    """

    alpha: float
    O: np.ndarray
    B: np.ndarray
    sqrt_lambda: float
    sqrt_mu: float
    e1: np.ndarray
    e2: np.ndarray

    @property
    def lam(self) -> float:
        return self.sqrt_lambda**2

    @property
    def mu(self) -> float:
        return self.sqrt_mu**2

    @property
    def eigenframe_matrix(self) -> np.ndarray:
        """Matrix of the operator in the basis ``e1, e2``: ``rot(alpha) @ diag(sqrt_lambda, sqrt_mu)``."""
        c, s = math.cos(self.alpha), math.sin(self.alpha)
        return np.array(
            [[c * self.sqrt_lambda, -s * self.sqrt_mu], [s * self.sqrt_lambda, c * self.sqrt_mu]]
        )


def _gram_eigen(a, b, c, d, D=None):
    """Eigen-data of ``A.T @ A`` for ``A = [[a, b], [c, d]]``.

    Forming ``A.T @ A`` squares the condition number, so its small eigenvalue
    has only absolute accuracy. When ``D = det(A)`` is supplied the small
    eigenvalue is recovered to full relative accuracy from ``lam * mu = D**2``.
    """
    lam, mu, e1, e2 = _sym_eig(a * a + c * c, b * b + d * d, a * b + c * d)
    if D is not None and mu > 0:
        lam = min(D * D / mu, mu)
    return lam, mu, e1, e2


def polar_decompose(A) -> PolarForm:
    """Factor ``A`` into a rotation and a symmetric positive-definite stretch.

    ``B`` is assembled from the eigen-data of ``A.T @ A`` and ``O = A B^-1``.
    Only the rotation branch is handled, so ``det(A)`` must be positive.
    """
    a, b, c, d = _entries(A)
    D = check_invertible(A)
    if D < 0:
        raise ReflectionCase("det(A) < 0: reflection case out of scope")

    lam, mu, (x1, y1), (x2, y2) = _gram_eigen(a, b, c, d, D)
    if x1 * y2 - y1 * x2 < 0:
        # positively oriented frame, so the operator reads rot(alpha) @ diag there
        x2, y2 = -x2, -y2
    s1, s2 = math.sqrt(lam), math.sqrt(mu)

    off = s1 * x1 * y1 + s2 * x2 * y2
    B = np.array([[s1 * x1 * x1 + s2 * x2 * x2, off], [off, s1 * y1 * y1 + s2 * y2 * y2]])
    # O = A (e1 e1^T / s1 + e2 e2^T / s2): columns of A e_i / s_i are orthonormal
    p1 = ((a * x1 + b * y1) / s1, (c * x1 + d * y1) / s1)
    p2 = ((a * x2 + b * y2) / s2, (c * x2 + d * y2) / s2)
    O = np.array(
        [
            [p1[0] * x1 + p2[0] * x2, p1[0] * y1 + p2[0] * y2],
            [p1[1] * x1 + p2[1] * x2, p1[1] * y1 + p2[1] * y2],
        ]
    )
    alpha = math.atan2(O[1, 0], O[0, 0])
    return PolarForm(alpha, O, B, s1, s2, np.array([x1, y1]), np.array([x2, y2]))


@dataclass(frozen=True)
class BoundCheck:
    """Where ``cos(alpha)`` falls relative to ``2 (lam mu)^(1/4) / (sqrt(lam) + sqrt(mu))``.

    ``side`` is ``"below"`` for a complex spectrum and ``"above"`` for a real one.
    """

    side: str
    bound: float
    cos_alpha: float

    @property
    def spectrum_kind(self) -> str:
        return "complex" if self.side == "below" else "real"


def cos_alpha_bound_check(p: PolarForm) -> BoundCheck:
    s1, s2 = p.sqrt_lambda, p.sqrt_mu
    bound = 2 * math.sqrt(s1 * s2) / (s1 + s2)
    cos_alpha = math.cos(p.alpha)
    # |cos alpha| so that real spectra with two negative eigenvalues land above as well
    gap = abs(cos_alpha) - bound
    if abs(gap) <= BOUND_TOL:
        raise Indeterminate(
            f"cos(alpha) within {BOUND_TOL:g} of the bound {bound:.12g}: repeated eigenvalue"
        )
    return BoundCheck("below" if gap < 0 else "above", bound, cos_alpha)


def operator_norm(A) -> float:
    """Largest singular value, ``max(sqrt(lam), sqrt(mu))``."""
    return math.sqrt(max(_gram_eigen(*_entries(A))[1], 0.0))


def length_ratio_bounds(A) -> tuple[float, float]:
    """Range ``[min(lam, mu), max(lam, mu)]`` of ``|A x|^2 / |x|^2``."""
    p = polar_decompose(A)
    return p.lam, p.mu


@dataclass(frozen=True, eq=False)
class IsometricDirections:
    """Unit directions whose length ``A`` preserves.

    ``directions`` holds one or two unit vectors (a line is given by one
    representative). ``all_directions`` is set when ``A`` is a rotation.
    """

    directions: tuple
    all_directions: bool = False


def isometric_directions(A) -> Optional[IsometricDirections]:
    """Directions ``x`` with ``|A x| = |x|``, or ``None`` when there are none.

    They exist iff ``min(lam, mu) <= 1 <= max(lam, mu)``. In eigenframe
    coordinates they solve ``x2**2 / x1**2 = (lam - 1) / (1 - mu)``.
    """
    p = polar_decompose(A)
    lam, mu = p.lam, p.mu
    lam_one = abs(lam - 1) <= ISOMETRY_TOL
    mu_one = abs(mu - 1) <= ISOMETRY_TOL
    if lam_one and mu_one:
        return IsometricDirections((), all_directions=True)
    if lam_one:
        return IsometricDirections((p.e1,))
    if mu_one:
        return IsometricDirections((p.e2,))
    if not lam < 1 < mu:
        return None
    # lam x1^2 + mu x2^2 = 1 with x1^2 + x2^2 = 1
    x1 = math.sqrt((mu - 1) / (mu - lam))
    x2 = math.sqrt((1 - lam) / (mu - lam))
    return IsometricDirections((x1 * p.e1 + x2 * p.e2, x1 * p.e1 - x2 * p.e2))


def spectrum_from_polar(A) -> str:
    """Spectrum kind read off the polar factors; agrees with :func:`classify` kind."""
    return cos_alpha_bound_check(polar_decompose(A)).spectrum_kind


__all__ = [
    "BoundCheck",
    "Indeterminate",
    "IsometricDirections",
    "PolarForm",
    "ReflectionCase",
    "cos_alpha_bound_check",
    "isometric_directions",
    "length_ratio_bounds",
    "operator_norm",
    "polar_decompose",
    "spectrum_from_polar",
]
