"""Integer and rational linear algebra used across the package.

One audited core: Hermite-style row reduction over the integers, with the
unimodular transform tracked. Kernels, membership certificates, sublattices
and quotients are all phrased through it. Determinants and Gram-Schmidt data
are exact rational computations on top.

Conventions: matrices are lists of rows; vectors act on the left (x @ A is a
row vector), so "the lattice of A" means the set of integer combinations of
A's rows.
"""

from __future__ import annotations

from fractions import Fraction
from typing import List, Optional, Sequence, Tuple

IntMatrix = List[List[int]]


def hnf_transform(a: Sequence[Sequence[int]]) -> Tuple[IntMatrix, IntMatrix]:
    """Row Hermite normal form with transform.

    Returns (h, u) with u unimodular and u @ a = h. Pivot rows come first in
    pivot-column order, each with positive pivot and entries above a pivot
    reduced into [0, pivot); the remaining rows of h are zero. The
    corresponding rows of u therefore span the left kernel of a.
    """
    rows = [list(r) for r in a]
    n = len(rows)
    m = len(rows[0]) if n else 0
    u = [[1 if i == j else 0 for j in range(n)] for i in range(n)]
    live = list(range(n))          # indices of rows not yet chosen as pivots
    pivots: List[Tuple[int, int]] = []   # (row index, pivot column)

    for col in range(m):
        cand = [r for r in live if rows[r][col] != 0]
        if not cand:
            continue
        # gcd elimination within the column
        while len(cand) > 1:
            cand.sort(key=lambda r: abs(rows[r][col]))
            p = cand[0]
            for r in cand[1:]:
                f = rows[r][col] // rows[p][col]
                if f:
                    _row_sub(rows, u, r, p, f)
            cand = [r for r in cand if rows[r][col] != 0]
        p = cand[0]
        if rows[p][col] < 0:
            rows[p] = [-x for x in rows[p]]
            u[p] = [-x for x in u[p]]
        pivots.append((p, col))
        live.remove(p)

    # reduce entries above each pivot into [0, pivot)
    for p, col in pivots:
        for q, qcol in pivots:
            if qcol < col and rows[q][col] != 0:
                f = rows[q][col] // rows[p][col]
                if f:
                    _row_sub(rows, u, q, p, f)

    order = [p for p, _ in pivots] + live
    h = [rows[i] for i in order]
    ut = [u[i] for i in order]
    return h, ut


def _row_sub(rows, u, r, p, f):
    rows[r] = [x - f * y for x, y in zip(rows[r], rows[p])]
    u[r] = [x - f * y for x, y in zip(u[r], u[p])]


def hnf(a: Sequence[Sequence[int]]) -> IntMatrix:
    """Nonzero rows of the Hermite normal form (a canonical lattice basis)."""
    h, _ = hnf_transform(a)
    return [row for row in h if any(row)]


def left_kernel(a: Sequence[Sequence[int]]) -> IntMatrix:
    """Basis of {x integer row : x @ a = 0}."""
    h, u = hnf_transform(a)
    return [u[i] for i, row in enumerate(h) if not any(row)]


def solve_left(a: Sequence[Sequence[int]], t: Sequence[int]) -> Optional[List[int]]:
    """An integer row x with x @ a = t, or None if none exists."""
    h, u = hnf_transform(a)
    piv = []
    for i, row in enumerate(h):
        if any(row):
            piv.append((i, next(c for c, v in enumerate(row) if v)))
    resid = list(t)
    coeffs = {}
    for i, col in piv:
        q, r = divmod(resid[col], h[i][col])
        if r:
            return None
        if q:
            coeffs[i] = q
            resid = [x - q * y for x, y in zip(resid, h[i])]
    if any(resid):
        return None
    n = len(u)
    x = [0] * n
    for i, q in coeffs.items():
        for k in range(n):
            x[k] += q * u[i][k]
    return x


def matmul(a, b):
    """Plain matrix product; entries may be int or Fraction."""
    bt = list(zip(*b))
    return [[sum(x * y for x, y in zip(row, col)) for col in bt] for row in a]


def det_fraction(m: Sequence[Sequence]) -> Fraction:
    """Exact determinant by fraction Gaussian elimination."""
    a = [[Fraction(x) for x in row] for row in m]
    n = len(a)
    d = Fraction(1)
    for c in range(n):
        p = next((r for r in range(c, n) if a[r][c]), None)
        if p is None:
            return Fraction(0)
        if p != c:
            a[c], a[p] = a[p], a[c]
            d = -d
        d *= a[c][c]
        for r in range(c + 1, n):
            f = a[r][c] / a[c][c]
            if f:
                for k in range(c, n):
                    a[r][k] -= f * a[c][k]
    return d


def invert_fraction(m: Sequence[Sequence]) -> List[List[Fraction]]:
    """Exact inverse by Gauss-Jordan; raises ZeroDivisionError if singular."""
    n = len(m)
    a = [[Fraction(x) for x in row] + [Fraction(1 if i == j else 0) for j in range(n)]
         for i, row in enumerate(m)]
    for c in range(n):
        p = next((r for r in range(c, n) if a[r][c]), None)
        if p is None:
            raise ZeroDivisionError("singular matrix")
        a[c], a[p] = a[p], a[c]
        inv = a[c][c]
        a[c] = [x / inv for x in a[c]]
        for r in range(n):
            if r != c and a[r][c]:
                f = a[r][c]
                a[r] = [x - f * y for x, y in zip(a[r], a[c])]
    return [row[n:] for row in a]
