"""
Average rotation of a random operator
=====================================

Draw matrices uniformly from a cube, keep those with complex spectrum, and
average the polar angle and the half width of the rotation range. The
estimates match a two dimensional quadrature.
"""

import math
import time

from planeop import (
    acceptance_ratio,
    estimate_mean_alpha,
    estimate_mean_gamma_prime,
    quadrature_mean_gamma_prime,
)

seed, n = 42, 1_000_000
start = time.perf_counter()
ratio = acceptance_ratio(seed, n)
g = estimate_mean_gamma_prime(seed, n)
a = estimate_mean_alpha(seed, n)
print(f"{time.perf_counter() - start:.2f} s for three estimates")

print(f"acceptance ratio  {ratio.mean:.5f} +- {ratio.std_error:.1e}   (1/4)")
print(f"mean gamma'       {g.mean:.5f} +- {g.std_error:.1e}   (2/pi = {2 / math.pi:.5f})")
print(f"mean alpha        {a.mean:.5f} +- {a.std_error:.1e}   (pi/2 = {math.pi / 2:.5f})")
print(f"quadrature        {quadrature_mean_gamma_prime():.12f}")

# The chunked generator makes results independent of the worker count.
print(estimate_mean_gamma_prime(seed, n, workers=4).mean == g.mean)
