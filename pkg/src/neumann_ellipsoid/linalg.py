"""Gaussian elimination over the rationals."""

from __future__ import annotations

from fractions import Fraction
from typing import List, Sequence

from .errors import SingularSystemError


def solve_square(matrix: Sequence[Sequence[Fraction]], rhs: Sequence[Fraction]) -> List[Fraction]:
    """Solve ``matrix @ x = rhs`` exactly.

    Pivots on the first nonzero entry of each column, so the elimination
    sequence depends only on the input.  Raises :class:`SingularSystemError`
    if the matrix is not invertible.
    """
    n = len(matrix)
    if len(rhs) != n or any(len(row) != n for row in matrix):
        raise ValueError("system must be square with matching right-hand side")
    a = [list(map(Fraction, row)) + [Fraction(b)] for row, b in zip(matrix, rhs)]
    for col in range(n):
        pivot = next((r for r in range(col, n) if a[r][col] != 0), None)
        if pivot is None:
            raise SingularSystemError(f"singular {n}x{n} system (column {col})")
        if pivot != col:
            a[col], a[pivot] = a[pivot], a[col]
        prow = a[col]
        inv = 1 / prow[col]
        for r in range(col + 1, n):
            factor = a[r][col]
            if factor == 0:
                continue
            factor *= inv
            row = a[r]
            for c in range(col, n + 1):
                if prow[c]:
                    row[c] -= factor * prow[c]
    x = [Fraction(0)] * n
    for r in range(n - 1, -1, -1):
        s = a[r][n] - sum((a[r][c] * x[c] for c in range(r + 1, n) if a[r][c]), Fraction(0))
        x[r] = s / a[r][r]
    return x
