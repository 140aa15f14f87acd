"""Exact integer linear algebra used by the dimension and model computations.

Matrices are plain lists of lists of Python ints; nothing here ever touches
floating point.
"""
from __future__ import annotations

from typing import Sequence

Matrix = list[list[int]]


def rank(rows: Sequence[Sequence[int]]) -> int:
    """Rank over Q by fraction-free (Bareiss) elimination."""
    m = [list(r) for r in rows]
    if not m:
        return 0
    n_rows, n_cols = len(m), len(m[0])
    r = 0
    prev = 1
    for col in range(n_cols):
        if r == n_rows:
            break
        piv = next((i for i in range(r, n_rows) if m[i][col] != 0), None)
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        p = m[r][col]
        for i in range(r + 1, n_rows):
            f = m[i][col]
            row_i, row_r = m[i], m[r]
            for j in range(col, n_cols):
                # exact division is guaranteed by Sylvester's identity
                row_i[j] = (p * row_i[j] - f * row_r[j]) // prev
        prev = p
        r += 1
    return r


def _ext_gcd(a: int, b: int) -> tuple[int, int, int]:
    x0, x1, y0, y1 = 1, 0, 0, 1
    while b:
        q, a, b = a // b, b, a % b
        x0, x1 = x1, x0 - q * x1
        y0, y1 = y1, y0 - q * y1
    return a, x0, y0


def row_echelon_unimodular(a: Sequence[Sequence[int]]) -> tuple[Matrix, Matrix, int]:
    """Return (H, U, r) with U unimodular, U @ a == H, H in integer row echelon
    form whose first r rows are non-zero and remaining rows are zero."""
    h = [list(row) for row in a]
    n = len(h)
    n_cols = len(h[0]) if n else 0
    u = [[int(i == j) for j in range(n)] for i in range(n)]
    r = 0
    for col in range(n_cols):
        if r == n:
            break
        for i in range(r + 1, n):
            if h[i][col] == 0:
                continue
            x, y = h[r][col], h[i][col]
            g, s, t = _ext_gcd(x, y)
            # 2x2 block [[s, t], [-y/g, x/g]] has determinant 1
            p, q = -y // g, x // g
            hr, hi = h[r], h[i]
            h[r] = [s * e + t * f for e, f in zip(hr, hi)]
            h[i] = [p * e + q * f for e, f in zip(hr, hi)]
            ur, ui = u[r], u[i]
            u[r] = [s * e + t * f for e, f in zip(ur, ui)]
            u[i] = [p * e + q * f for e, f in zip(ur, ui)]
        if h[r][col] != 0:
            if h[r][col] < 0:
                h[r] = [-e for e in h[r]]
                u[r] = [-e for e in u[r]]
            r += 1
    return h, u, r


def integer_kernel(rows: Sequence[Sequence[int]], n_cols: int) -> Matrix:
    """Z-basis of {y in Z^n_cols : M y = 0} for M with the given rows.

    The returned lattice is saturated by construction, i.e. it equals its
    rational span intersected with Z^n_cols.
    """
    if not rows:
        return [[int(i == j) for j in range(n_cols)] for i in range(n_cols)]
    transposed = [[row[j] for row in rows] for j in range(n_cols)]
    _, u, r = row_echelon_unimodular(transposed)
    return [positive_leading(u[i]) for i in range(r, n_cols)]


def positive_leading(v: list[int]) -> list[int]:
    """Flip sign so the first non-zero entry is positive."""
    for x in v:
        if x:
            return v if x > 0 else [-e for e in v]
    return v


def size_reduce(basis: Matrix) -> Matrix:
    """Cheap pairwise reduction of a lattice basis to keep entries small.

    Repeatedly replaces b_i by b_i - round(<b_i,b_j>/<b_j,b_j>) b_j while that
    shortens it.  The lattice spanned is unchanged.
    """
    b = [list(v) for v in basis]
    improved = True
    while improved:
        improved = False
        for i in range(len(b)):
            for j in range(len(b)):
                if i == j:
                    continue
                nj = sum(x * x for x in b[j])
                if nj == 0:
                    continue
                dot = sum(x * y for x, y in zip(b[i], b[j]))
                q = (2 * dot + nj) // (2 * nj)
                if q:
                    cand = [x - q * y for x, y in zip(b[i], b[j])]
                    if sum(x * x for x in cand) < sum(x * x for x in b[i]):
                        b[i] = cand
                        improved = True
    return [positive_leading(v) for v in b]
