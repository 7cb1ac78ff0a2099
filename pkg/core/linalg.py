"""Exact linear algebra over the rationals."""
import logging
from fractions import Fraction
from math import lcm
from typing import List, Sequence

from sympy import Matrix, Rational

logger = logging.getLogger(__name__)


def integer_row(row: Sequence[Fraction]) -> List[int]:
    """Scale a rational row by the lcm of its denominators."""
    scale = 1
    for x in row:
        scale = lcm(scale, Fraction(x).denominator)
    return [int(Fraction(x) * scale) for x in row]


def bareiss_rank(rows: Sequence[Sequence[Fraction]]) -> int:
    """Rank by fraction-free Gaussian elimination.

    Rows are scaled to integers first, so every intermediate division is exact.
    Columns without a pivot are skipped rather than failing.
    """
    matrix = [integer_row(r) for r in rows if any(r)]
    if not matrix:
        return 0
    n_rows, n_cols = len(matrix), len(matrix[0])
    rank = 0
    prev_pivot = 1
    for col in range(n_cols):
        if rank == n_rows:
            break
        pivot_row = next((r for r in range(rank, n_rows) if matrix[r][col] != 0), None)
        if pivot_row is None:
            continue
        matrix[rank], matrix[pivot_row] = matrix[pivot_row], matrix[rank]
        pivot = matrix[rank][col]
        for r in range(rank + 1, n_rows):
            lead = matrix[r][col]
            matrix[r] = [
                (pivot * matrix[r][c] - lead * matrix[rank][c]) // prev_pivot
                for c in range(n_cols)
            ]
        prev_pivot = pivot
        rank += 1
    return rank


def nullspace(rows: Sequence[Sequence[Fraction]], n_cols: int) -> List[List[Fraction]]:
    """Basis of the right kernel, each vector scaled to integers."""
    if not rows:
        return [[Fraction(int(i == j)) for j in range(n_cols)] for i in range(n_cols)]
    m = Matrix([[Rational(x.numerator, x.denominator) if isinstance(x, Fraction) else x
                 for x in row] for row in rows])
    basis = []
    for vec in m.nullspace():
        values = [Fraction(int(v.p), int(v.q)) for v in vec]
        basis.append([Fraction(x) for x in integer_row(values)])
    logger.debug("nullspace: %d x %d matrix, kernel dimension %d", len(rows), n_cols, len(basis))
    return basis
