"""Exact rational linear algebra plus the one float routine the package needs.

Ranks and determinants run fraction-free over the integers (denominators are
cleared row by row first), so there is no threshold anywhere in an exact
path: a rank drop of one is always visible.
"""

from __future__ import annotations

import math
from fractions import Fraction
from typing import Sequence

__all__ = [
    "exact_rank",
    "exact_det",
    "solve_exact",
    "sum_squared_minors",
    "qr_positive_diagonal",
]


def _integer_rows(rows) -> list[list[int]]:
    """Copy rows, clearing denominators per row (rank/zero-pattern preserving)."""
    out = []
    for row in rows:
        scale = 1
        for value in row:
            if isinstance(value, Fraction):
                scale = scale * value.denominator // math.gcd(scale, value.denominator)
        out.append([int(value * scale) if scale != 1 else int(value) for value in row])
    return out


def exact_rank(rows: Sequence[Sequence]) -> int:
    """Rank over the rationals via fraction-free (Bareiss) elimination.

    Full pivoting: the pivot is the smallest-magnitude nonzero entry of the
    remaining submatrix, which keeps the integer growth down.
    """
    m = _integer_rows(rows)
    if not m:
        return 0
    nrows, ncols = len(m), len(m[0])
    rank = 0
    prev = 1
    while rank < nrows and rank < ncols:
        best = None
        for i in range(rank, nrows):
            row = m[i]
            for j in range(rank, ncols):
                v = row[j]
                if v != 0 and (best is None or abs(v) < best[0]):
                    best = (abs(v), i, j)
        if best is None:
            break
        _, pi, pj = best
        if pi != rank:
            m[pi], m[rank] = m[rank], m[pi]
        if pj != rank:
            for row in m:
                row[pj], row[rank] = row[rank], row[pj]
        pivot_row = m[rank]
        pivot = pivot_row[rank]
        for i in range(rank + 1, nrows):
            row = m[i]
            factor = row[rank]
            for j in range(rank + 1, ncols):
                # Bareiss update: the division by the previous pivot is exact.
                row[j] = (row[j] * pivot - factor * pivot_row[j]) // prev
            row[rank] = 0
        prev = pivot
        rank += 1
    return rank


def exact_det(rows: Sequence[Sequence]) -> Fraction:
    """Exact determinant of a square rational matrix."""
    n = len(rows)
    if any(len(row) != n for row in rows):
        raise ValueError("determinant needs a square matrix")
    m = [[Fraction(v) for v in row] for row in rows]
    det = Fraction(1)
    for col in range(n):
        pivot_row = None
        for i in range(col, n):
            if m[i][col] != 0:
                pivot_row = i
                break
        if pivot_row is None:
            return Fraction(0)
        if pivot_row != col:
            m[pivot_row], m[col] = m[col], m[pivot_row]
            det = -det
        pivot = m[col][col]
        det *= pivot
        for i in range(col + 1, n):
            factor = m[i][col] / pivot
            if factor == 0:
                continue
            row = m[i]
            base = m[col]
            for j in range(col, n):
                row[j] -= factor * base[j]
    return det


def solve_exact(matrix: Sequence[Sequence], rhs: Sequence) -> list[Fraction]:
    """Solve a square rational system exactly; raises on a singular matrix."""
    n = len(matrix)
    m = [[Fraction(v) for v in row] + [Fraction(rhs[i])] for i, row in enumerate(matrix)]
    for col in range(n):
        pivot_row = None
        for i in range(col, n):
            if m[i][col] != 0:
                pivot_row = i
                break
        if pivot_row is None:
            raise ValueError("singular matrix")
        if pivot_row != col:
            m[pivot_row], m[col] = m[col], m[pivot_row]
        pivot = m[col][col]
        for i in range(n):
            if i == col:
                continue
            factor = m[i][col] / pivot
            if factor == 0:
                continue
            for j in range(col, n + 1):
                m[i][j] -= factor * m[col][j]
    return [m[i][n] / m[i][i] for i in range(n)]


def sum_squared_minors(rows: Sequence[Sequence]) -> Fraction:
    """Sum of squares of all maximal (|rows| x |rows|) minors, exactly.

    Nonzero iff the rows are linearly independent. Exponential in the number
    of columns; meant for cross-checks on small systems (<= 8 rows).
    """
    from itertools import combinations

    r = len(rows)
    if r == 0:
        raise ValueError("need at least one row")
    ncols = len(rows[0])
    if r > ncols:
        return Fraction(0)
    total = Fraction(0)
    for cols in combinations(range(ncols), r):
        sub = [[row[j] for j in cols] for row in rows]
        det = exact_det(sub)
        total += det * det
    return total


def qr_positive_diagonal(columns: Sequence[Sequence[float]]):
    """Gram-Schmidt factorization A = B C with B orthogonal, C upper
    triangular with positive diagonal; input and output are column lists.

    Runs modified Gram-Schmidt with one reorthogonalization pass, enough to
    keep B orthogonal to ~1e-14 for the small well-conditioned frames that
    arise from non-singular tuples.
    """
    d = len(columns)
    q: list[list[float]] = []
    r = [[0.0] * d for _ in range(d)]
    for j in range(d):
        v = [float(x) for x in columns[j]]
        if len(v) != d:
            raise ValueError("columns must form a square matrix")
        for _ in range(2):
            for i in range(j):
                c = sum(a * b for a, b in zip(q[i], v))
                r[i][j] += c
                v = [a - c * b for a, b in zip(v, q[i])]
        norm = math.sqrt(sum(a * a for a in v))
        if norm == 0.0 or not math.isfinite(norm):
            raise ValueError("columns are numerically dependent")
        r[j][j] = norm
        q.append([a / norm for a in v])
    return q, r
