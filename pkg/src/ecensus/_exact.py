"""Small exact linear algebra over Z and Q."""
from __future__ import annotations

from fractions import Fraction
from functools import reduce
from math import gcd, lcm


def det(matrix) -> int:
    """Bareiss fraction-free determinant of a square integer matrix."""
    a = [list(map(int, row)) for row in matrix]
    n = len(a)
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for i in range(k + 1, n):
                if a[i][k]:
                    a[k], a[i] = a[i], a[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
        prev = a[k][k]
    return sign * a[n - 1][n - 1] if n else 1


def rref(matrix) -> tuple[list[list[Fraction]], list[int]]:
    """Reduced row echelon form with pivots chosen left to right, top to bottom."""
    a = [[Fraction(x) for x in row] for row in matrix]
    rows = len(a)
    cols = len(a[0]) if rows else 0
    pivots = []
    r = 0
    for c in range(cols):
        p = next((i for i in range(r, rows) if a[i][c] != 0), None)
        if p is None:
            continue
        a[r], a[p] = a[p], a[r]
        pv = a[r][c]
        a[r] = [x / pv for x in a[r]]
        for i in range(rows):
            if i != r and a[i][c] != 0:
                f = a[i][c]
                a[i] = [x - f * y for x, y in zip(a[i], a[r])]
        pivots.append(c)
        r += 1
        if r == rows:
            break
    return a, pivots


def rank(matrix) -> int:
    return len(rref(matrix)[1])


def integer_nullspace(matrix) -> list[tuple[int, ...]]:
    """Primitive integer basis of the rational kernel, one vector per free column.

    Vectors are listed in increasing order of their free column and scaled so
    that the free coordinate is positive.
    """
    a, pivots = rref(matrix)
    cols = len(matrix[0])
    free = [c for c in range(cols) if c not in pivots]
    basis = []
    for f in free:
        vec = [Fraction(0)] * cols
        vec[f] = Fraction(1)
        for row, pc in enumerate(pivots):
            vec[pc] = -a[row][f]
        den = reduce(lcm, (x.denominator for x in vec), 1)
        ints = [int(x * den) for x in vec]
        g = reduce(gcd, ints, 0)
        basis.append(tuple(x // g for x in ints))
    return basis
