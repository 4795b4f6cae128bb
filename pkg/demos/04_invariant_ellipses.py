"""
Orbits on invariant ellipses
============================

An operator with determinant one and complex spectrum is conjugate to a
rotation, so its orbits trace ellipses. A rational angle closes the orbit.
"""

import math

import numpy as np

from planeop import ellipse_through, invariant_basis, orbit
from planeop.cli import render_svg

# theta = pi/3 after a shear: the orbit returns after six steps.
A = np.array([[1.0, -1.0], [1.0, 0.0]])
o = orbit(A, (1.0, 0.0), 12)
print("period:", o.period, " theta/2pi:", o.theta_over_2pi)

basis = invariant_basis(A)
print("P A P^-1 =\n", basis.P @ A @ np.linalg.inv(basis.P))

# An irrational angle never closes, but every point stays on the ellipse.
P = np.array([[1.3, 0.4], [-0.2, 0.8]])
R = np.array([[math.cos(1.0), -math.sin(1.0)], [math.sin(1.0), math.cos(1.0)]])
B = P @ R @ np.linalg.inv(P)
x0 = (0.3, 0.7)
o = orbit(B, x0, 10_000)
e = ellipse_through(B, x0)
print("period:", o.period)
print("semi-axes:", e.a, e.b, " eccentricity:", e.eccentricity)
print("largest relative drift:", np.abs(e.residual(o.points)).max())

with open("orbit.svg", "w") as fh:
    fh.write(render_svg(e, o.points[:200]))
print("wrote orbit.svg")
