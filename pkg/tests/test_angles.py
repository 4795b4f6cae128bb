import math

import numpy as np
import pytest

from helpers import brute_gammas, matrix_with_eigendata, random_matrices
from planeop.angles import (
    InvalidBeta,
    InvalidEigenvalues,
    ProfileParams,
    RangeMode,
    f_critical_points,
    f_profile,
    gamma_max_real,
    gamma_of,
    gamma_prime_max,
    rotation_range,
    sampled_gammas,
)
from planeop.core import DegenerateSpectrum, rot
from planeop.polar import polar_decompose


def cos_angle_by_construction(delta, beta, t):
    """cos of the angle between x and A x, built from eigendata (lambda1 = 1)."""
    u1 = np.array([1.0, 0.0])
    u2 = np.array([math.cos(beta), math.sin(beta)])
    A = matrix_with_eigendata(1.0, delta, u1, u2)
    x = t * u1 + u2
    y = A @ x
    return x @ y / (np.linalg.norm(x) * np.linalg.norm(y))


@pytest.mark.parametrize(
    "delta, beta, t, expected",
    [(4, math.pi / 2, 2, 0.8), (4, math.pi / 3, -2, 0.5)],
)
def test_f_profile_examples(delta, beta, t, expected):
    value = f_profile(ProfileParams(delta, beta), t)
    assert value == pytest.approx(expected, abs=1e-15)
    assert value == pytest.approx(cos_angle_by_construction(delta, beta, t), abs=1e-14)


def test_f_profile_matches_construction_everywhere():
    p = ProfileParams(2.7, 0.9)
    ts = np.linspace(-20, 20, 401)
    expected = [cos_angle_by_construction(p.delta, p.beta, t) for t in ts]
    np.testing.assert_allclose(f_profile(p, ts), expected, atol=1e-13)


def test_f_profile_asymptote():
    assert f_profile(ProfileParams(5, 0.7), 1e9) == pytest.approx(1, abs=1e-8)


def test_profile_params_validation():
    with pytest.raises(InvalidEigenvalues):
        ProfileParams(1.0, 0.5)
    with pytest.raises(InvalidBeta):
        ProfileParams(2.0, 0.0)


def test_critical_points():
    assert f_critical_points(ProfileParams(4, 1.0)) == (0, 2, -2)


def test_critical_point_derivative_vanishes():
    p = ProfileParams(9, math.pi / 4)
    h = 1e-5
    deriv = (f_profile(p, 3 + h) - f_profile(p, 3 - h)) / (2 * h)
    assert abs(deriv) < 1e-6


def test_critical_points_are_minima_on_each_half_line():
    p = ProfileParams(6.0, 1.1)
    cp = f_critical_points(p)
    pos = np.linspace(1e-3, 100, 100_001)
    assert f_profile(p, cp.t_plus) <= f_profile(p, pos).min() + 1e-15
    assert f_profile(p, cp.t_minus) <= f_profile(p, -pos).min() + 1e-15


def test_gamma_max_real_plug_in():
    assert gamma_max_real(1, 4, math.pi / 3) == pytest.approx(math.pi / 3, abs=1e-12)
    assert gamma_max_real(1, 4, math.pi / 2) == pytest.approx(math.acos(0.8), abs=1e-15)
    assert gamma_max_real(1, 1 + 1e-12, 0.5) < 1e-5


@pytest.mark.parametrize("beta", [math.pi / 3, math.pi / 2])
def test_gamma_max_real_against_sampling(beta):
    A = matrix_with_eigendata(1, 4, [1, 0], [math.cos(beta), math.sin(beta)])
    sampled = np.abs(brute_gammas(A, 100_000)).max()
    g = gamma_max_real(1, 4, beta)
    assert sampled <= g + 1e-9
    assert sampled >= g - 1e-6


def test_gamma_max_real_validation():
    with pytest.raises(InvalidEigenvalues):
        gamma_max_real(4, 1, 0.5)
    with pytest.raises(InvalidEigenvalues):
        gamma_max_real(-1, 1, 0.5)
    with pytest.raises(InvalidBeta):
        gamma_max_real(1, 2, 2.0)


def test_profile_minimum_matches_bound():
    rng = np.random.default_rng(3)
    for _ in range(200):
        l1 = rng.uniform(0.1, 3)
        l2 = l1 * rng.uniform(1.01, 10)
        beta = rng.uniform(0.05, math.pi / 2)
        p = ProfileParams(l2 / l1, beta)
        fmin = f_profile(p, f_critical_points(p).t_minus)
        assert fmin == pytest.approx(math.cos(gamma_max_real(l1, l2, beta)), abs=1e-12)


def test_range_complex_example():
    r = rotation_range([[0, -2], [1, 0]])
    assert r.mode is RangeMode.ONE_DIRECTIONAL
    g = math.acos(2 * math.sqrt(2) / 3)
    assert r.gamma_min == pytest.approx(math.pi / 2 - g)
    assert r.gamma_max == pytest.approx(math.pi / 2 + g)
    assert (round(r.gamma_min, 4), round(r.gamma_max, 4)) == (1.2310, 1.9106)
    sampled = brute_gammas(np.array([[0, -2.0], [1, 0]]), 100_000)
    assert sampled.min() == pytest.approx(r.gamma_min, abs=1e-6)
    assert sampled.max() == pytest.approx(r.gamma_max, abs=1e-6)


def test_range_conformal():
    r = rotation_range(2.5 * rot(1.2))
    assert r.mode is RangeMode.ONE_DIRECTIONAL
    assert r.gamma_min == pytest.approx(1.2, abs=1e-12)
    assert r.gamma_max == pytest.approx(1.2, abs=1e-12)


def test_range_mixed_signs():
    r = rotation_range(np.diag([2.0, -1.0]))
    assert (r.gamma_min, r.gamma_max, r.mode) == (0, math.pi, RangeMode.ADJACENT_CONES)


def test_range_real_positive():
    A = matrix_with_eigendata(1, 4, [1, 0], [0.5, math.sqrt(3) / 2])
    r = rotation_range(A)
    assert r.mode is RangeMode.BIDIRECTIONAL
    assert r.gamma_max == pytest.approx(math.pi / 3, abs=1e-12)
    assert r.gamma_min == -r.gamma_max


def test_range_central_symmetric():
    A = -matrix_with_eigendata(1, 4, [1, 0], [0.5, math.sqrt(3) / 2])
    r = rotation_range(A)
    assert r.mode is RangeMode.CENTRAL_SYMMETRIC
    assert r.gamma_min == pytest.approx(math.pi - math.pi / 3, abs=1e-12)
    assert r.gamma_max == math.pi
    g = np.abs(brute_gammas(A, 100_000))
    assert g.min() >= r.gamma_min - 1e-9
    assert g.min() == pytest.approx(r.gamma_min, abs=1e-6)


def test_range_degenerate():
    with pytest.raises(DegenerateSpectrum):
        rotation_range([[1, 1], [0, 1]])


def test_gamma_of_examples():
    assert gamma_of(rot(math.pi / 3), (1, 0)) == pytest.approx(math.pi / 3)
    A = matrix_with_eigendata(2, 5, [1, 0], [0.6, 0.8])
    assert gamma_of(A, (0.6, 0.8)) == pytest.approx(0, abs=1e-15)
    x = np.array([1, 1]) / math.sqrt(2)
    value = gamma_of([[0, -2], [1, 0]], x)
    assert value == pytest.approx(math.atan2(3, -1), abs=1e-15)
    assert round(value, 4) == 1.8925


def test_sampled_gammas_agree_with_gamma_of():
    A = np.array([[0.4, -1.3], [2.2, 0.1]])
    phi = np.pi * np.arange(50) / 50
    g = sampled_gammas(A, 50)
    for ph, val in zip(phi, g):
        assert val == pytest.approx(gamma_of(A, (math.cos(ph), math.sin(ph))), abs=1e-14)


def test_complex_one_direction_and_envelope():
    rng = np.random.default_rng(5)
    for A in random_matrices(rng, 50, kind="complex"):
        r = rotation_range(A)
        g = brute_gammas(A)
        alpha = polar_decompose(A).alpha
        assert np.all(np.sign(g) == np.sign(alpha))
        assert g.min() >= r.gamma_min - 1e-9
        assert g.max() <= r.gamma_max + 1e-9


def test_real_positive_polar_route_changes_sign():
    rng = np.random.default_rng(6)
    for A in random_matrices(rng, 100, positive=True):
        p = polar_decompose(A)
        gp = gamma_prime_max(p.sqrt_lambda, p.sqrt_mu)
        assert abs(gp) > abs(p.alpha)
        assert np.sign(p.alpha - gp) != np.sign(p.alpha + gp)


def test_stretch_bound_equals_orthonormal_formula():
    rng = np.random.default_rng(8)
    for _ in range(1000):
        s1, s2 = np.sort(rng.uniform(0.05, 5, 2))
        if s2 - s1 < 1e-6:
            continue
        assert gamma_prime_max(s1, s2) == pytest.approx(
            gamma_max_real(s1, s2, math.pi / 2), abs=1e-12
        )

