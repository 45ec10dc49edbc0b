"""
Exact determinants and linear solves.

Rational matrices go through fraction-free Bareiss elimination; matrices over
any other commutative ring (``LaurentPoly`` entries) use a memoised Laplace
expansion that only needs ``+``, ``-`` and ``*``.
"""
from fractions import Fraction
from functools import lru_cache
from typing import Any, List, Optional, Sequence, Tuple

from .errors import SingularSystem
from .logger import get_logger

logger = get_logger(__name__)

Matrix = Sequence[Sequence[Any]]


def _is_zero(value: Any) -> bool:
    if hasattr(value, "is_zero"):
        return value.is_zero()
    return value == 0


def _find_pivot(mat: List[List[Fraction]], column: int, start: int) -> Optional[int]:
    for row in range(start, len(mat)):
        if mat[row][column] != 0:
            return row
    return None


def bareiss_determinant(matrix: Matrix) -> Fraction:
    """Fraction-free elimination; every intermediate division is exact"""
    mat = [[Fraction(entry) for entry in row] for row in matrix]
    n = len(mat)
    if n == 0:
        return Fraction(1)

    sign = 1
    previous = Fraction(1)
    for k in range(n - 1):
        pivot_row = _find_pivot(mat, k, k)
        if pivot_row is None:
            return Fraction(0)
        if pivot_row != k:
            mat[k], mat[pivot_row] = mat[pivot_row], mat[k]
            sign = -sign
        pivot = mat[k][k]
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                mat[i][j] = (pivot * mat[i][j] - mat[i][k] * mat[k][j]) / previous
            mat[i][k] = Fraction(0)
        previous = pivot
    return sign * mat[n - 1][n - 1]


def laplace_determinant(matrix: Matrix, zero: Any, one: Any) -> Any:
    """Cofactor expansion along successive rows, memoised on the unused columns"""
    rows: Tuple[Tuple[Any, ...], ...] = tuple(tuple(row) for row in matrix)
    n = len(rows)

    @lru_cache(maxsize=None)
    def minor(row: int, columns: Tuple[int, ...]) -> Any:
        if row == n:
            return one
        total = zero
        for position, column in enumerate(columns):
            entry = rows[row][column]
            if _is_zero(entry):
                continue
            rest = minor(row + 1, columns[:position] + columns[position + 1:])
            term = entry * rest
            total = total + term if position % 2 == 0 else total - term
        return total

    return minor(0, tuple(range(n)))


def determinant(matrix: Matrix, zero: Any = None, one: Any = None) -> Any:
    """Dispatch on the entry type: Bareiss for rationals, Laplace otherwise"""
    n = len(matrix)
    if any(len(row) != n for row in matrix):
        raise ValueError("determinant of a non-square matrix")
    entries = [entry for row in matrix for entry in row]
    if all(isinstance(entry, (int, Fraction)) for entry in entries):
        logger.debug("bareiss determinant", size=n)
        return bareiss_determinant(matrix)
    if zero is None or one is None:
        raise TypeError("ring determinant needs explicit zero and one")
    logger.debug("laplace determinant", size=n)
    return laplace_determinant(matrix, zero, one)


def solve(matrix: Matrix, rhs: Sequence[Fraction]) -> List[Fraction]:
    """Gauss-Jordan elimination on the augmented matrix [matrix | rhs]"""
    n = len(matrix)
    augmented = [[Fraction(entry) for entry in row] + [Fraction(b)] for row, b in zip(matrix, rhs)]

    for column in range(n):
        pivot_row = _find_pivot(augmented, column, column)
        if pivot_row is None:
            raise SingularSystem(f"no pivot in column {column} of a {n}x{n} system")
        augmented[column], augmented[pivot_row] = augmented[pivot_row], augmented[column]
        pivot = augmented[column][column]
        augmented[column] = [entry / pivot for entry in augmented[column]]
        for row in range(n):
            if row == column or augmented[row][column] == 0:
                continue
            factor = augmented[row][column]
            augmented[row] = [a - factor * b for a, b in zip(augmented[row], augmented[column])]

    return [augmented[row][n] for row in range(n)]
