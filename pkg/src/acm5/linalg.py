"""Small dense linear algebra over exact rationals (or floats in check mode).

Everything works on plain lists of lists.  Pivoting is by magnitude for
floats and first-nonzero for Fractions; zero decisions go through
``scalars.sis_zero`` so the float tolerance is honored uniformly.
"""

from __future__ import annotations

from fractions import Fraction

from .scalars import sis_zero


def _is_zero(x, tol_scale):
    return sis_zero(x, tol_scale)


def rref(matrix, tol_scale=1.0):
    """Reduced row echelon form; returns (rows, pivot_columns)."""
    rows = [list(r) for r in matrix]
    if not rows:
        return rows, []
    ncols = len(rows[0])
    pivots = []
    r = 0
    for c in range(ncols):
        if r >= len(rows):
            break
        best = None
        for i in range(r, len(rows)):
            if not _is_zero(rows[i][c], tol_scale):
                if best is None:
                    best = i
                elif isinstance(rows[i][c], float) and abs(rows[i][c]) > abs(rows[best][c]):
                    best = i
                if not isinstance(rows[i][c], float):
                    break
        if best is None:
            continue
        rows[r], rows[best] = rows[best], rows[r]
        piv = rows[r][c]
        rows[r] = [x / piv for x in rows[r]]
        for i in range(len(rows)):
            if i != r and not _is_zero(rows[i][c], tol_scale):
                f = rows[i][c]
                rows[i] = [a - f * b for a, b in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
    return rows, pivots


def rank(matrix, tol_scale=1.0):
    return len(rref(matrix, tol_scale)[1])


def solve_unique(A, b, tol_scale=1.0):
    """Solve A x = b requiring a unique solution; raises ValueError otherwise."""
    n = len(A[0]) if A else 0
    aug = [list(row) + [bi] for row, bi in zip(A, b)]
    rows, pivots = rref(aug, tol_scale)
    if n in pivots:
        raise ValueError("inconsistent linear system")
    if len(pivots) < n:
        raise ValueError("underdetermined linear system")
    x = [Fraction(0)] * n
    for r, c in enumerate(pivots):
        x[c] = rows[r][n]
    return x


def nullspace(matrix, tol_scale=1.0):
    """Basis of the kernel of the row-space map."""
    if not matrix:
        return []
    ncols = len(matrix[0])
    rows, pivots = rref(matrix, tol_scale)
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    one = 1.0 if any(isinstance(x, float) for row in matrix for x in row) else Fraction(1)
    zero = one * 0
    for fc in free:
        v = [zero] * ncols
        v[fc] = one
        for r, pc in enumerate(pivots):
            v[pc] = -rows[r][fc]
        basis.append(v)
    return basis


def dot(u, v):
    acc = u[0] * v[0]
    for a, b in zip(u[1:], v[1:]):
        acc = acc + a * b
    return acc


def weighted_dot(u, v, weights):
    acc = None
    for a, b, w in zip(u, v, weights):
        t = a * b * w
        acc = t if acc is None else acc + t
    return acc


def project_onto_span(basis, v, inner, tol_scale=1.0):
    """Coefficients of the orthogonal projection of v onto span(basis),
    via the Gram-matrix solve; callers recombine with the basis."""
    if not basis:
        return []
    gram = [[inner(bi, bj) for bj in basis] for bi in basis]
    rhs = [inner(bi, v) for bi in basis]
    return solve_unique(gram, rhs, tol_scale)
