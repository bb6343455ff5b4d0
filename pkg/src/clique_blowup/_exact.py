"""Exact linear algebra on Python ints and fractions.

Fraction-free (Bareiss) elimination for integer determinants and ranks,
plus a plain rational Gauss-Jordan inverse. All routines are exact; they
exist so that rank dichotomies and spanning-tree counts never depend on
floating-point rounding.
"""

from __future__ import annotations

from fractions import Fraction

from .errors import NumericalFailureError


def bareiss_determinant(matrix: list[list[int]]) -> int:
    """Exact determinant of a square integer matrix.

    One-step fraction-free elimination: every intermediate entry is a minor
    of the original matrix, so the division in the update rule is exact.
    """
    m = [list(row) for row in matrix]
    size = len(m)
    if size == 0:
        return 1
    for row in m:
        if len(row) != size:
            raise ValueError("matrix must be square")
    sign = 1
    prev = 1
    for k in range(size - 1):
        if m[k][k] == 0:
            # partial pivot: any nonzero entry below keeps exactness
            pivot_row = next((i for i in range(k + 1, size) if m[i][k] != 0), None)
            if pivot_row is None:
                return 0
            m[k], m[pivot_row] = m[pivot_row], m[k]
            sign = -sign
        pivot = m[k][k]
        for i in range(k + 1, size):
            row_i = m[i]
            row_k = m[k]
            factor = row_i[k]
            for j in range(k + 1, size):
                row_i[j] = (row_i[j] * pivot - factor * row_k[j]) // prev
            row_i[k] = 0
        prev = pivot
    return sign * m[size - 1][size - 1]


def integer_rank(matrix: list[list[int]]) -> int:
    """Rank over the rationals of an integer matrix, fraction-free.

    Bareiss updates stay valid with column skips: after k pivots each entry
    is a (k+1)x(k+1) minor of the original matrix, so dividing by the
    previous pivot remains an exact integer division.
    """
    m = [list(row) for row in matrix]
    rows = len(m)
    cols = len(m[0]) if rows else 0
    rank = 0
    prev = 1
    row = 0
    for col in range(cols):
        if row >= rows:
            break
        pivot_row = next((i for i in range(row, rows) if m[i][col] != 0), None)
        if pivot_row is None:
            continue
        m[row], m[pivot_row] = m[pivot_row], m[row]
        pivot = m[row][col]
        for i in range(row + 1, rows):
            factor = m[i][col]
            for j in range(col + 1, cols):
                m[i][j] = (m[i][j] * pivot - factor * m[row][j]) // prev
            m[i][col] = 0
        prev = pivot
        rank += 1
        row += 1
    return rank


def fraction_inverse(matrix: list[list[Fraction]]) -> list[list[Fraction]]:
    """Exact inverse of a nonsingular rational matrix (Gauss-Jordan)."""
    size = len(matrix)
    aug = [
        [Fraction(x) for x in row] + [Fraction(int(i == j)) for j in range(size)]
        for i, row in enumerate(matrix)
    ]
    for col in range(size):
        pivot_row = next((i for i in range(col, size) if aug[i][col] != 0), None)
        if pivot_row is None:
            raise NumericalFailureError("matrix is singular")
        aug[col], aug[pivot_row] = aug[pivot_row], aug[col]
        pivot = aug[col][col]
        aug[col] = [x / pivot for x in aug[col]]
        for i in range(size):
            if i == col or aug[i][col] == 0:
                continue
            factor = aug[i][col]
            aug[i] = [a - factor * b for a, b in zip(aug[i], aug[col])]
    return [row[size:] for row in aug]
