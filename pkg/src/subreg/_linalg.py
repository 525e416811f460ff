"""Small exact linear algebra over the rationals.

Matrices are sequences of rows. Everything is done with ``Fraction`` so the
results are exact; sizes here never exceed about a dozen rows.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import combinations
from math import gcd
from typing import Sequence

Matrix = Sequence[Sequence]


def _as_fractions(m: Matrix) -> list[list[Fraction]]:
    return [[Fraction(x) for x in row] for row in m]


def det(m: Matrix) -> Fraction:
    """Determinant by Gaussian elimination."""
    a = _as_fractions(m)
    n = len(a)
    if any(len(row) != n for row in a):
        raise ValueError("determinant of a non-square matrix")
    sign = 1
    result = Fraction(1)
    for col in range(n):
        pivot = next((r for r in range(col, n) if a[r][col] != 0), None)
        if pivot is None:
            return Fraction(0)
        if pivot != col:
            a[col], a[pivot] = a[pivot], a[col]
            sign = -sign
        p = a[col][col]
        result *= p
        for r in range(col + 1, n):
            f = a[r][col] / p
            if f:
                a[r] = [x - f * y for x, y in zip(a[r], a[col])]
    return sign * result


def solve(m: Matrix, rhs: Sequence) -> list[Fraction]:
    """Solve ``m x = rhs`` for square invertible ``m``."""
    a = _as_fractions(m)
    n = len(a)
    aug = [row + [Fraction(b)] for row, b in zip(a, rhs)]
    for col in range(n):
        pivot = next((r for r in range(col, n) if aug[r][col] != 0), None)
        if pivot is None:
            raise ZeroDivisionError("singular system")
        aug[col], aug[pivot] = aug[pivot], aug[col]
        p = aug[col][col]
        aug[col] = [x / p for x in aug[col]]
        for r in range(n):
            if r != col and aug[r][col] != 0:
                f = aug[r][col]
                aug[r] = [x - f * y for x, y in zip(aug[r], aug[col])]
    return [row[n] for row in aug]


def inverse(m: Matrix) -> list[list[Fraction]]:
    n = len(m)
    cols = [solve(m, [1 if r == c else 0 for r in range(n)]) for c in range(n)]
    return [[cols[c][r] for c in range(n)] for r in range(n)]


def maximal_minor_gcd(m: Matrix) -> int:
    """gcd of the maximal minors of an integer matrix with more columns than rows.

    A full-rank integer map is onto a saturated sublattice exactly when this is 1.
    """
    rows = len(m)
    ncols = len(m[0]) if rows else 0
    g = 0
    for cols in combinations(range(ncols), rows):
        d = det([[row[c] for c in cols] for row in m])
        if d.denominator != 1:
            raise ValueError("non-integral matrix")
        g = gcd(g, int(d))
        if g == 1:
            break
    return g
