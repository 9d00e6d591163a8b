"""Dense symmetric eigenvalues by the cyclic Jacobi method.

Independent of any library eigensolver on purpose: this is the numeric
oracle that closed-form spectra are checked against, so it must not share
code paths with them or with LAPACK-backed routines.  Rotations sweep the
strict upper triangle in row-cyclic order until the off-diagonal Frobenius
norm drops below tol times the Frobenius norm of the input, which bounds
every eigenvalue error by that same threshold (Wielandt-Hoffman).
"""

from __future__ import annotations

import math

import numpy as np

# Sizes beyond this are outside the intended desk scale; sweeps are O(n^3)
# with numpy-vectorized rotations, so order 1500 stays in the minutes range.
MAX_ORDER = 1500
_MAX_SWEEPS = 100


def sym_eigenvalues(mat, tol: float = 1e-12) -> list[float]:
    """All eigenvalues of a symmetric matrix, sorted in decreasing order.

    The input may be any square array-like with real entries.  Asymmetry
    beyond tol (relative to the matrix scale) is rejected with the location
    of the worst offending pair.
    """
    a = np.array(mat, dtype=float)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise ValueError("square matrix required")
    n = a.shape[0]
    if n > MAX_ORDER:
        raise ValueError(f"order {n} exceeds the supported cap {MAX_ORDER}")
    scale = max(1.0, float(np.max(np.abs(a))))
    asym = np.abs(a - a.T)
    worst = float(asym.max(initial=0.0))
    if worst > tol * scale:
        i, j = np.unravel_index(int(asym.argmax()), asym.shape)
        raise ValueError(f"matrix not symmetric: |a[{i}][{j}] - a[{j}][{i}]| = {worst:g}")
    a = (a + a.T) / 2.0
    if n == 1:
        return [float(a[0, 0])]

    frob = math.sqrt(float((a * a).sum()))
    threshold = tol * max(frob, np.finfo(float).tiny)
    # rotations with |a_pq| below this cannot push the off norm past threshold
    skip = threshold / (n * n)
    offmask = ~np.eye(n, dtype=bool)

    for _ in range(_MAX_SWEEPS):
        # summed directly over off-diagonal entries; subtracting the diagonal
        # from the total norm instead would cancel catastrophically
        off = math.sqrt(float((a[offmask] ** 2).sum()))
        if off < threshold:
            break
        for p in range(n - 1):
            for q in range(p + 1, n):
                apq = a[p, q]
                if abs(apq) <= skip:
                    continue
                tau = (a[q, q] - a[p, p]) / (2.0 * apq)
                if tau >= 0:
                    t = 1.0 / (tau + math.sqrt(1.0 + tau * tau))
                else:
                    t = -1.0 / (-tau + math.sqrt(1.0 + tau * tau))
                c = 1.0 / math.sqrt(1.0 + t * t)
                s = t * c
                row_p = a[p, :].copy()
                row_q = a[q, :].copy()
                a[p, :] = c * row_p - s * row_q
                a[q, :] = s * row_p + c * row_q
                col_p = a[:, p].copy()
                col_q = a[:, q].copy()
                a[:, p] = c * col_p - s * col_q
                a[:, q] = s * col_p + c * col_q
                a[p, q] = a[q, p] = 0.0
    else:
        raise ArithmeticError("Jacobi sweeps failed to converge")
    return sorted((float(x) for x in np.diag(a)), reverse=True)
