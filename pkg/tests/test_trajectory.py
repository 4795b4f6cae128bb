import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from planeop.core import ZeroVector, rot
from planeop.trajectory import (
    DetNotOne,
    NotComplexSpectrum,
    SingularBasis,
    conic_invariants,
    ellipse_through,
    find_period,
    invariant_basis,
    orbit,
)

HEX = np.array([[1.0, -1.0], [1.0, 0.0]])
HEX_ORBIT = [(1, 0), (1, 1), (0, 1), (-1, 0), (-1, -1), (0, -1)]


def theta_one_operator():
    P = np.array([[1.3, 0.4], [-0.2, 0.8]])
    A = P @ rot(1.0) @ np.linalg.inv(P)
    return A / math.sqrt(np.linalg.det(A))


def test_basis_of_rotation():
    b = invariant_basis(rot(math.pi / 2))
    assert b.theta == pytest.approx(math.pi / 2)
    np.testing.assert_allclose(b.u, [1, 0], atol=1e-15)
    np.testing.assert_allclose(b.v, [0, 1], atol=1e-15)
    assert b.conjugacy_residual(rot(math.pi / 2)) <= 1e-15


def test_basis_hexagonal():
    b = invariant_basis(HEX)
    assert math.cos(b.theta) == pytest.approx(0.5, abs=1e-15)
    assert b.conjugacy_residual(HEX) <= 1e-12


def test_basis_rejects_det_not_one():
    with pytest.raises(DetNotOne):
        invariant_basis([[1, 1], [-1, 1]])
    with pytest.raises(DetNotOne):
        invariant_basis(np.diag([2.0, 3.0]))


def test_basis_rejects_real_spectrum():
    with pytest.raises(NotComplexSpectrum):
        invariant_basis([[2, 0], [0, 0.5]])


def test_basis_random_det_one():
    rng = np.random.default_rng(0)
    n = 0
    while n < 500:
        A = rng.uniform(-3, 3, (2, 2))
        D = np.linalg.det(A)
        if D <= 0.05:
            continue
        A = A / math.sqrt(D)
        if (A[0, 0] + A[1, 1]) ** 2 >= 4 - 1e-6:
            continue
        n += 1
        b = invariant_basis(A)
        assert b.conjugacy_residual(A) <= 1e-10
        assert math.cos(b.theta) == pytest.approx((A[0, 0] + A[1, 1]) / 2, abs=1e-12)


def test_conic_invariants_examples():
    c = conic_invariants(np.eye(2))
    np.testing.assert_array_equal(c.Af, np.eye(2))
    assert (c.S, c.delta) == (2, 1)
    c = conic_invariants(np.diag([2.0, 1.0]))
    np.testing.assert_array_equal(c.Af, np.diag([4.0, 1.0]))
    assert (c.S, c.delta) == (5, 4)


def test_conic_invariants_singular():
    with pytest.raises(SingularBasis):
        conic_invariants([[1, 2], [2, 4]])


@settings(max_examples=500)
@given(st.lists(st.floats(-3, 3, allow_nan=False), min_size=4, max_size=4))
def test_conic_delta_is_det_squared(entries):
    P = np.array(entries).reshape(2, 2)
    detP = P[0, 0] * P[1, 1] - P[0, 1] * P[1, 0]
    if abs(detP) < 1e-6:
        return
    c = conic_invariants(P)
    np.testing.assert_allclose(c.Af, P.T @ P, atol=1e-14)
    assert abs(c.delta - detP**2) <= 1e-10 * max(1.0, c.S**2)
    assert c.S > 0 and c.delta > 0


def test_ellipse_circle():
    e = ellipse_through(rot(math.pi / 2), (1, 0))
    np.testing.assert_allclose(e.Af, np.eye(2), atol=1e-15)
    assert e.r2 == pytest.approx(1)
    assert e.a == pytest.approx(1) and e.b == pytest.approx(1)


def test_ellipse_hexagonal_contains_orbit():
    e = ellipse_through(HEX, (1, 0))
    assert np.abs(e.form(HEX_ORBIT) - e.r2).max() <= 1e-12 * e.r2
    assert e.S > 0 and e.delta > 0 and e.Delta < 0
    assert e.Delta == pytest.approx(-e.delta * e.r2)
    assert e.a >= e.b


def test_ellipse_scaling():
    A = theta_one_operator()
    e1 = ellipse_through(A, (0.3, -0.4))
    e2 = ellipse_through(A, (0.6, -0.8))
    assert e2.a == pytest.approx(2 * e1.a, rel=1e-14)
    assert e2.b == pytest.approx(2 * e1.b, rel=1e-14)
    np.testing.assert_allclose(e2.major_axis, e1.major_axis, atol=1e-15)


def test_ellipse_outline_on_curve():
    e = ellipse_through(theta_one_operator(), (1, 2))
    assert np.abs(e.residual(e.outline(256))).max() <= 1e-12


def test_ellipse_zero_point():
    with pytest.raises(ZeroVector):
        ellipse_through(HEX, (0, 0))


def test_normalization_invariance():
    A = theta_one_operator()
    base = ellipse_through(A, (1, 0))
    rng = np.random.default_rng(4)
    for _ in range(50):
        factor = rng.lognormal() * np.exp(1j * rng.uniform(0, 2 * np.pi))
        e = ellipse_through(A, (1, 0), normalization=factor)
        assert e.eccentricity == pytest.approx(base.eccentricity, abs=1e-9)
        assert abs(abs(e.major_axis @ base.major_axis) - 1) <= 1e-9
        assert e.a / base.a == pytest.approx(e.b / base.b, rel=1e-9)
        assert invariant_basis(A, factor).conjugacy_residual(A) <= 1e-10


def test_orbit_quarter_turn():
    o = orbit([[0, -1], [1, 0]], (1, 0), 8)
    assert o.period == 4
    np.testing.assert_allclose(o.points[:4], [(1, 0), (0, 1), (-1, 0), (0, -1)], atol=1e-15)
    assert o.theta_over_2pi == pytest.approx(0.25)


def test_orbit_hexagonal():
    o = orbit(HEX, (1, 0), 12)
    assert o.period == 6
    np.testing.assert_array_equal(o.points[:6], HEX_ORBIT)
    assert len({tuple(p) for p in o.points}) == 6


def test_orbit_period_needs_enough_points():
    assert orbit(HEX, (1, 0), 5).period is None
    assert orbit(HEX, (1, 0), 6).period == 6


def test_orbit_irrational_angle():
    A = theta_one_operator()
    x0 = np.array([0.3, 0.7])
    o = orbit(A, x0, 10_000)
    assert o.period is None
    e = ellipse_through(A, x0)
    assert np.abs(e.residual(o.points)).max() <= 1e-9
    assert o.points.shape == (10_000, 2)


def test_period_points_distinct():
    for q in (3, 5, 7, 8, 12):
        A = rot(2 * math.pi / q)
        o = orbit(A, (2.0, 1.0), 2 * q)
        assert o.period == q
        pts = o.points[:q]
        d = np.linalg.norm(pts[:, None] - pts[None], axis=-1)
        assert d[~np.eye(q, dtype=bool)].min() > 1e-6 * math.sqrt(5)


def test_find_period():
    assert find_period(2 * math.pi / 7) == 7
    assert find_period(2 * math.pi * 3 / 7) == 7
    assert find_period(1.0) is None
