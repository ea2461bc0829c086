"""Tiny exact linear algebra over Fraction.

Everything downstream (weights, projections, chamber geometry) needs exact
rational answers, so this is plain Gaussian elimination on Fractions with
no pivoting heuristics beyond "first nonzero".
"""

from __future__ import annotations

from fractions import Fraction
from typing import List, Sequence

from .errors import SingularMatrixError

Matrix = Sequence[Sequence[Fraction]]


def _as_fraction_rows(m: Matrix) -> List[List[Fraction]]:
    return [[Fraction(x) for x in row] for row in m]


def solve(m: Matrix, rhs: Sequence[Fraction]) -> List[Fraction]:
    """Solve m x = rhs exactly; raises SingularMatrixError if singular."""
    n = len(m)
    a = _as_fraction_rows(m)
    b = [Fraction(x) for x in rhs]
    if any(len(row) != n for row in a) or len(b) != n:
        raise SingularMatrixError("solve needs a square system")
    for col in range(n):
        piv = next((r for r in range(col, n) if a[r][col] != 0), None)
        if piv is None:
            raise SingularMatrixError("matrix is singular")
        a[col], a[piv] = a[piv], a[col]
        b[col], b[piv] = b[piv], b[col]
        inv = 1 / a[col][col]
        a[col] = [x * inv for x in a[col]]
        b[col] *= inv
        for r in range(n):
            if r != col and a[r][col] != 0:
                f = a[r][col]
                a[r] = [x - f * y for x, y in zip(a[r], a[col])]
                b[r] -= f * b[col]
    return b


def inverse(m: Matrix) -> List[List[Fraction]]:
    """Exact matrix inverse by column-wise solves."""
    n = len(m)
    cols = []
    for j in range(n):
        e = [Fraction(int(i == j)) for i in range(n)]
        cols.append(solve(m, e))
    return [[cols[j][i] for j in range(n)] for i in range(n)]


def determinant(m: Matrix) -> Fraction:
    """Exact determinant by fraction Gaussian elimination."""
    n = len(m)
    a = _as_fraction_rows(m)
    det = Fraction(1)
    for col in range(n):
        piv = next((r for r in range(col, n) if a[r][col] != 0), None)
        if piv is None:
            return Fraction(0)
        if piv != col:
            a[col], a[piv] = a[piv], a[col]
            det = -det
        det *= a[col][col]
        inv = 1 / a[col][col]
        for r in range(col + 1, n):
            if a[r][col] != 0:
                f = a[r][col] * inv
                a[r] = [x - f * y for x, y in zip(a[r], a[col])]
    return det
