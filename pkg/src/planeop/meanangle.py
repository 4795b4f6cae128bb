"""Mean rotation angles over the set of operators with complex spectrum.

Coordinates ``(x, y, z, t)`` on the space of matrices ``[[a, b], [c, d]]``::

    a = (x + t)/sqrt2,  b = (y + z)/sqrt2,  c = (y - z)/sqrt2,  d = (t - x)/sqrt2

turn the complex-spectrum condition into the cone ``x**2 + y**2 < z**2``. The
angles involved are homogeneous, so averages over the cone equal averages over
its intersection with the product of unit disks ``x**2 + y**2 < 1``,
``z**2 + t**2 < 1``. That bounded set is sampled by rejection.

Reference values: mean of the stretch-factor turn ``2/pi``, mean polar angle
``pi/2``, acceptance ratio ``1/4``.
"""

from __future__ import annotations

import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import Callable, Iterator, NamedTuple

import numpy as np
from scipy import integrate

from .core import PlaneOpError, _entries

SQRT2 = math.sqrt(2.0)
CHUNK = 1 << 16

MEAN_GAMMA_PRIME = 2 / math.pi
MEAN_ALPHA = math.pi / 2
ACCEPTANCE = 0.25


class OutsideDomain(PlaneOpError):
    pass


class GPoint(NamedTuple):
    """A point (or arrays of points) in the rotated coordinates."""

    x: float
    y: float
    z: float
    t: float


def to_xyzt(A) -> GPoint:
    a, b, c, d = _entries(A)
    return GPoint((a - d) / SQRT2, (b + c) / SQRT2, (b - c) / SQRT2, (a + d) / SQRT2)


def from_xyzt(p: GPoint) -> np.ndarray:
    x, y, z, t = p
    return np.array([[x + t, y + z], [y - z, t - x]]) / SQRT2


def in_G(p: GPoint):
    return p.x**2 + p.y**2 < p.z**2


def gamma_prime_max_at(p: GPoint):
    """Largest turn of the positive polar factor, ``arcsin(sqrt((x^2+y^2)/(t^2+z^2)))``.

    Vectorized over array-valued points.
    """
    x, y, z, t = (np.asarray(v, dtype=float) for v in p)
    rho2 = x * x + y * y
    if not np.all(rho2 < z * z):
        raise OutsideDomain("point outside the complex-spectrum cone x^2 + y^2 < z^2")
    out = np.arcsin(np.sqrt(rho2 / (t * t + z * z)))
    return float(out) if out.ndim == 0 else out


def alpha_at(p: GPoint):
    """Unsigned polar rotation angle ``arccos(t / sqrt(t^2 + z^2))`` on the half ``z > 0``.

    This is ``|alpha|`` of the polar factor: in these coordinates the
    rotation is clockwise when ``z > 0``.
    """
    z = np.asarray(p.z, dtype=float)
    t = np.asarray(p.t, dtype=float)
    if not np.all(z > 0):
        raise OutsideDomain("alpha is taken on the half z > 0")
    out = np.arctan2(z, t)
    return float(out) if out.ndim == 0 else out


def _disk(rng: np.random.Generator, n: int):
    # inverse-CDF radius: exactly uniform, no rejection loop
    r = np.sqrt(rng.random(n))
    phi = 2 * np.pi * rng.random(n)
    return r * np.cos(phi), r * np.sin(phi)


def _chunk_sizes(n: int) -> list[int]:
    full, rest = divmod(n, CHUNK)
    return [CHUNK] * full + ([rest] if rest else [])


def _draw_chunk(seed: int, index: int, size: int) -> GPoint:
    rng = np.random.default_rng([seed, index])
    x, y = _disk(rng, size)
    z, t = _disk(rng, size)
    keep = x * x + y * y < z * z
    return GPoint(x[keep], y[keep], z[keep], t[keep])


def sample_G_prime(seed: int, n: int) -> Iterator[GPoint]:
    """Yield accepted points from ``n`` uniform draws on the product of unit disks.

    Draws come in chunks of ``CHUNK``; chunk ``k`` uses the generator seeded
    with ``(seed, k)``, so the stream depends only on ``seed`` and ``n``.
    Each yielded item holds one chunk's accepted points as arrays.
    """
    if n < 1:
        raise ValueError("n must be positive")
    for k, size in enumerate(_chunk_sizes(n)):
        yield _draw_chunk(seed, k, size)


@dataclass(frozen=True)
class McEstimate:
    mean: float
    std_error: float
    n_samples: int
    n_accepted: int
    seed: int

    @property
    def acceptance_ratio(self) -> float:
        return self.n_accepted / self.n_samples

    def within(self, expected: float, sigmas: float = 4.0) -> bool:
        return abs(self.mean - expected) <= sigmas * self.std_error


class _Moments(NamedTuple):
    count: int
    mean: float
    m2: float


def _moments(values: np.ndarray) -> _Moments:
    if values.size == 0:
        return _Moments(0, 0.0, 0.0)
    m = float(np.mean(values))
    return _Moments(values.size, m, float(np.sum((values - m) ** 2)))


def _combine(parts: list[_Moments]) -> _Moments:
    # pairwise merge keeps the result independent of how chunks were scheduled
    parts = [p for p in parts if p.count]
    if not parts:
        return _Moments(0, 0.0, 0.0)
    while len(parts) > 1:
        merged = []
        for i in range(0, len(parts) - 1, 2):
            a, b = parts[i], parts[i + 1]
            n = a.count + b.count
            delta = b.mean - a.mean
            merged.append(
                _Moments(
                    n,
                    a.mean + delta * b.count / n,
                    a.m2 + b.m2 + delta * delta * a.count * b.count / n,
                )
            )
        if len(parts) % 2:
            merged.append(parts[-1])
        parts = merged
    return parts[0]


def _estimate(
    seed: int, n: int, statistic: Callable[[GPoint], np.ndarray], workers: int
) -> McEstimate:
    if n < 10_000:
        raise ValueError(f"need at least 10^4 samples, got {n}")
    sizes = _chunk_sizes(n)

    def work(k: int) -> _Moments:
        return _moments(statistic(_draw_chunk(seed, k, sizes[k])))

    if workers > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            parts = list(pool.map(work, range(len(sizes))))
    else:
        parts = [work(k) for k in range(len(sizes))]
    total = _combine(parts)
    std = math.sqrt(total.m2 / (total.count - 1)) if total.count > 1 else math.inf
    return McEstimate(total.mean, std / math.sqrt(total.count), n, total.count, seed)


def estimate_mean_gamma_prime(seed: int, n: int, workers: int = 1) -> McEstimate:
    """Monte Carlo mean of :func:`gamma_prime_max_at` over the sampled domain (target ``2/pi``)."""
    return _estimate(seed, n, gamma_prime_max_at, workers)


def _alpha_upper_half(p: GPoint) -> np.ndarray:
    upper = p.z > 0
    return alpha_at(GPoint(*(v[upper] for v in p)))


def estimate_mean_alpha(seed: int, n: int, workers: int = 1) -> McEstimate:
    """Monte Carlo mean of :func:`alpha_at` over accepted points with ``z > 0`` (target ``pi/2``).

    ``n_accepted`` counts only the points that entered the mean.
    """
    return _estimate(seed, n, _alpha_upper_half, workers)


def acceptance_ratio(seed: int, n: int) -> McEstimate:
    """Fraction of draws landing in the cone, as an estimate with binomial error."""
    accepted = sum(p.x.size for p in sample_G_prime(seed, n))
    ratio = accepted / n
    return McEstimate(ratio, math.sqrt(ratio * (1 - ratio) / n), n, accepted, seed)


def mean_gamma_interval(gamma_prime: McEstimate, alpha: McEstimate) -> tuple[float, float]:
    """Bounds ``[mean alpha - mean g', mean alpha + mean g']`` on the mean rotation angle."""
    return alpha.mean - gamma_prime.mean, alpha.mean + gamma_prime.mean


def quadrature_mean_gamma_prime(epsabs: float = 1e-13) -> float:
    """Deterministic value of the mean stretch-factor turn by 2-D quadrature.

    With polar coordinates in the ``(x, y)`` and ``(t, z)`` planes and
    ``s = rho / r``, the radial and azimuthal integrals factor out of both
    numerator and denominator, leaving integrals over
    ``0 < xi < pi/2``, ``0 < s < sin(xi)`` of ``s * arcsin(s)`` and ``s``.
    """
    num, _ = integrate.dblquad(
        lambda s, xi: s * math.asin(s), 0, math.pi / 2, 0, math.sin, epsabs=epsabs
    )
    den, _ = integrate.dblquad(lambda s, xi: s, 0, math.pi / 2, 0, math.sin, epsabs=epsabs)
    return num / den


def quadrature_volume_G_prime(epsabs: float = 1e-13) -> float:
    """Volume of the bounded sampling domain by the same reduction (exactly ``pi**2 / 4``)."""
    inner, _ = integrate.dblquad(lambda s, xi: s, 0, math.pi / 2, 0, math.sin, epsabs=epsabs)
    # 2*pi from the (x, y) angle, 4 quadrants in xi, 1/4 from int_0^1 r^3 dr
    return 2 * math.pi * 4 * 0.25 * inner
