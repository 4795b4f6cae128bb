"""Extremal rotation angles between ``x`` and ``A x``.

For a real positive spectrum the unsigned angle is bounded by a closed form in
the eigenvalues and the angle between the eigenlines; for a complex spectrum
every vector turns the same way, by an amount within ``alpha +/- g`` where
``alpha`` is the polar rotation angle and ``g`` the largest turn produced by
the stretch factor alone.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from typing import NamedTuple

import numpy as np

from .core import PlaneOpError, as_vector, classify, signed_angle
from .polar import polar_decompose


class InvalidEigenvalues(PlaneOpError):
    pass


class InvalidBeta(PlaneOpError):
    pass


class RangeMode(enum.Enum):
    ONE_DIRECTIONAL = "one-directional"
    BIDIRECTIONAL = "bidirectional"
    CENTRAL_SYMMETRIC = "central-symmetric"
    ADJACENT_CONES = "adjacent-cones"


@dataclass(frozen=True)
class RotationRange:
    """Envelope of the rotation angle ``gamma(x)``.

    How to read ``[gamma_min, gamma_max]`` depends on ``mode``:

    * ``ONE_DIRECTIONAL`` (complex spectrum): signed angle, every vector turns
      in the direction of ``alpha``.
    * ``BIDIRECTIONAL`` (real, both eigenvalues positive): symmetric envelope
      ``[-g, g]``; vectors on opposite sides of an eigenline turn oppositely.
    * ``CENTRAL_SYMMETRIC`` (real, both negative): bounds on ``|gamma|``.
    * ``ADJACENT_CONES`` (real, opposite signs): ``|gamma|`` anywhere in ``[0, pi]``.
    """

    gamma_min: float
    gamma_max: float
    mode: RangeMode

    def contains(self, gamma: float, tol: float = 0.0) -> bool:
        if self.mode in (RangeMode.CENTRAL_SYMMETRIC, RangeMode.ADJACENT_CONES):
            gamma = abs(gamma)
        return self.gamma_min - tol <= gamma <= self.gamma_max + tol


@dataclass(frozen=True)
class ProfileParams:
    """Eigenvalue ratio ``delta = lambda2 / lambda1 > 1`` and eigenline angle ``beta``."""

    delta: float
    beta: float

    def __post_init__(self):
        if not self.delta > 1:
            raise InvalidEigenvalues(f"delta must exceed 1, got {self.delta!r}")
        if not 0 < self.beta <= math.pi / 2:
            raise InvalidBeta(f"beta must lie in (0, pi/2], got {self.beta!r}")


def f_profile(p: ProfileParams, t):
    """Cosine of the rotation angle for eigen-coordinate ratio ``t = x1 / x2``.

    Accepts scalar or array ``t``.
    """
    cb = math.cos(p.beta)
    delta = p.delta
    t = np.asarray(t, dtype=float)
    num = t * t + (1 + delta) * cb * t + delta
    den = np.sqrt(t * t + 2 * t * cb + 1) * np.sqrt(t * t + 2 * delta * t * cb + delta * delta)
    out = num / den
    return float(out) if out.ndim == 0 else out


class CriticalPoints(NamedTuple):
    t0: float
    t_plus: float
    t_minus: float


def f_critical_points(p: ProfileParams) -> CriticalPoints:
    """Roots of the profile's derivative, whose numerator is ``t**3 - delta*t``.

    ``t_plus`` minimizes the profile on ``t > 0`` and ``t_minus`` on ``t < 0``.
    """
    r = math.sqrt(p.delta)
    return CriticalPoints(0.0, r, -r)


def gamma_max_real(lambda1: float, lambda2: float, beta: float) -> float:
    """Largest unsigned rotation angle of an operator with eigenvalues ``0 < lambda1 < lambda2``.

    ``beta`` is the acute angle between the eigenlines.
    """
    if not 0 < lambda1 < lambda2:
        raise InvalidEigenvalues(f"need 0 < lambda1 < lambda2, got {lambda1!r}, {lambda2!r}")
    if not 0 < beta <= math.pi / 2:
        raise InvalidBeta(f"beta must lie in (0, pi/2], got {beta!r}")
    cb = math.cos(beta)
    g = math.sqrt(lambda1 * lambda2)
    s = lambda1 + lambda2
    ratio = (2 * g - s * cb) / (s - 2 * g * cb)
    return math.acos(max(-1.0, min(1.0, ratio)))


def gamma_prime_max(sqrt_lambda: float, sqrt_mu: float) -> float:
    """Largest rotation produced by the positive factor ``diag(sqrt_lambda, sqrt_mu)``."""
    ratio = 2 * math.sqrt(sqrt_lambda * sqrt_mu) / (sqrt_lambda + sqrt_mu)
    return math.acos(min(1.0, ratio))


def rotation_range(A) -> RotationRange:
    sp = classify(A)
    if sp.kind == "complex":
        p = polar_decompose(A)
        g = gamma_prime_max(p.sqrt_lambda, p.sqrt_mu)
        return RotationRange(p.alpha - g, p.alpha + g, RangeMode.ONE_DIRECTIONAL)
    if sp.both_positive:
        g = gamma_max_real(sp.lambda1, sp.lambda2, sp.beta)
        return RotationRange(-g, g, RangeMode.BIDIRECTIONAL)
    if sp.both_negative:
        # -A has the positive spectrum |lambda2| < |lambda1| and the same eigenlines
        g = gamma_max_real(-sp.lambda2, -sp.lambda1, sp.beta)
        return RotationRange(math.pi - g, math.pi, RangeMode.CENTRAL_SYMMETRIC)
    return RotationRange(0.0, math.pi, RangeMode.ADJACENT_CONES)


def gamma_of(A, x) -> float:
    """Signed rotation angle from ``x`` to ``A x``."""
    x = as_vector(x)
    return signed_angle(x, np.asarray(A, dtype=float) @ x)


def sampled_gammas(A, n: int = 10_000) -> np.ndarray:
    """Signed rotation angles for ``n`` unit directions evenly spaced over a half turn.

    ``x`` and ``-x`` rotate by the same angle, so a half turn covers every line.
    """
    M = np.asarray(A, dtype=float)
    phi = np.pi * np.arange(n) / n
    X = np.stack([np.cos(phi), np.sin(phi)])
    Y = M @ X
    cross = X[0] * Y[1] - X[1] * Y[0]
    dot = X[0] * Y[0] + X[1] * Y[1]
    return np.arctan2(cross, dot)
