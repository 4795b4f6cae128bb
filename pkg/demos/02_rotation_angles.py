"""
How far does an operator turn a vector?
=======================================

The signed angle between ``x`` and ``A x`` stays inside a closed range that
depends only on the spectrum. We compare that range with a brute force scan.
"""

import numpy as np

from planeop import rotation_range, sampled_gammas

# Complex spectrum: every vector turns the same way.
A = np.array([[0.0, -2.0], [1.0, 0.0]])
r = rotation_range(A)
g = sampled_gammas(A, 100_000)
print(r)
print("sampled min/max:", g.min(), g.max())

# Positive real spectrum: vectors turn both ways, by at most gamma_max.
beta = np.pi / 3
u1, u2 = np.array([1.0, 0.0]), np.array([np.cos(beta), np.sin(beta)])
U = np.column_stack([u1, u2])
B = U @ np.diag([1.0, 4.0]) @ np.linalg.inv(U)
r = rotation_range(B)
g = sampled_gammas(B, 100_000)
print(r)
print("largest sampled |gamma|:", np.abs(g).max())

# Eigenvalues of mixed sign: some vector is turned by any angle in [0, pi].
print(rotation_range(np.diag([2.0, -1.0])))
