"""Geometry of invertible linear operators on the plane.

Spectrum classification, polar decomposition, extremal rotation angles,
operator norm, mean rotation angles by Monte Carlo, and invariant ellipses
of area-preserving operators.
"""

__version__ = "0.1.0"

from .angles import (
    ProfileParams,
    RangeMode,
    RotationRange,
    f_critical_points,
    f_profile,
    gamma_max_real,
    gamma_of,
    gamma_prime_max,
    rotation_range,
    sampled_gammas,
)
from .core import (
    ComplexPair,
    DegenerateSpectrum,
    PlaneOpError,
    RealDistinct,
    SingularMatrix,
    ZeroVector,
    apply,
    classify,
    det,
    eigen_symmetric,
    rot,
    signed_angle,
)
from .meanangle import (
    acceptance_ratio,
    estimate_mean_alpha,
    estimate_mean_gamma_prime,
    from_xyzt,
    quadrature_mean_gamma_prime,
    to_xyzt,
)
from .polar import (
    PolarForm,
    ReflectionCase,
    cos_alpha_bound_check,
    isometric_directions,
    length_ratio_bounds,
    operator_norm,
    polar_decompose,
)
from .trajectory import conic_invariants, ellipse_through, invariant_basis, orbit
