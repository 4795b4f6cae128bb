"""Random operator generators shared by the test modules."""

import numpy as np

from planeop.core import DegenerateSpectrum, SingularMatrix, classify

COND_MAX = 1e6


def condition(A):
    s = np.linalg.svd(A, compute_uv=False)
    return s[..., 0] / s[..., -1]


def random_matrices(rng, n, *, min_det=None, kind=None, positive=None, cond_max=COND_MAX):
    """``n`` matrices with entries uniform in [-3, 3], filtered.

    ``min_det`` keeps only det > min_det; ``kind`` ("real"/"complex") filters by
    spectrum, ``positive=True`` keeps real spectra with both eigenvalues positive.
    """
    out = []
    while len(out) < n:
        batch = rng.uniform(-3, 3, size=(4 * n + 64, 2, 2))
        dets = np.linalg.det(batch)
        ok = np.abs(dets) > 1e-9
        if min_det is not None:
            ok &= dets > min_det
        batch = batch[ok]
        batch = batch[condition(batch) < cond_max]
        for A in batch:
            if kind is not None or positive is not None:
                try:
                    sp = classify(A)
                except (DegenerateSpectrum, SingularMatrix):
                    continue
                if kind is not None and sp.kind != kind:
                    continue
                if positive is not None and (sp.kind != "real" or sp.both_positive != positive):
                    continue
            out.append(A)
            if len(out) == n:
                break
    return np.array(out)


def unit_directions(n):
    """``n`` unit vectors evenly spaced over a half turn, as a (2, n) array."""
    phi = np.pi * np.arange(n) / n
    return np.stack([np.cos(phi), np.sin(phi)])


def brute_gammas(A, n=10_000):
    """Signed angles from x to A x over evenly spaced directions."""
    X = unit_directions(n)
    Y = A @ X
    return np.arctan2(X[0] * Y[1] - X[1] * Y[0], X[0] * Y[0] + X[1] * Y[1])


def matrix_with_eigendata(lam1, lam2, u1, u2):
    """Operator with eigenpairs (lam1, u1), (lam2, u2)."""
    U = np.column_stack([u1, u2])
    return U @ np.diag([lam1, lam2]) @ np.linalg.inv(U)
