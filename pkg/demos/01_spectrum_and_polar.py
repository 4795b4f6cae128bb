"""
Spectrum and polar form of a plane operator
===========================================

Every invertible 2x2 matrix with positive determinant factors as a rotation
``O`` times a symmetric positive definite stretch ``B``. Comparing the
rotation angle with the stretch ratio tells whether the eigenvalues are real.
"""

import numpy as np

from planeop import classify, cos_alpha_bound_check, polar_decompose

# A quarter turn after stretching the second axis by two.
A = np.array([[0.0, -2.0], [1.0, 0.0]])
print(classify(A))

p = polar_decompose(A)
print("alpha =", p.alpha)
print("O =\n", p.O)
print("B =\n", p.B)
print("reconstruction error:", np.abs(p.O @ p.B - A).max())

# cos(alpha) against 2 sqrt(lambda mu) / (lambda + mu): below means complex.
print(cos_alpha_bound_check(p))

# A diagonal stretch has real eigenvalues and no rotation at all.
D = np.diag([2.0, 3.0])
print(classify(D))
print(cos_alpha_bound_check(polar_decompose(D)))
