"""Exact dense linear algebra over rationals, for small systems."""

from fractions import Fraction


class SingularMatrix(ArithmeticError):
    """The system has no unique solution."""


def solve(matrix, rhs):
    """Solve A x = b exactly by Gaussian elimination with row pivoting."""
    n = len(matrix)
    aug = [[Fraction(v) for v in row] + [Fraction(b)]
           for row, b in zip(matrix, rhs)]
    for col in range(n):
        pivot = next((r for r in range(col, n) if aug[r][col]), None)
        if pivot is None:
            raise SingularMatrix("no pivot in column %d" % col)
        aug[col], aug[pivot] = aug[pivot], aug[col]
        lead = aug[col][col]
        for r in range(n):
            if r != col and aug[r][col]:
                scale = aug[r][col] / lead
                aug[r] = [a - scale * b for a, b in zip(aug[r], aug[col])]
    return [aug[r][n] / aug[r][r] for r in range(n)]


def invert(matrix):
    """The exact inverse, column by column."""
    n = len(matrix)
    cols = [solve(matrix, [Fraction(int(i == j)) for i in range(n)])
            for j in range(n)]
    return [[cols[j][i] for j in range(n)] for i in range(n)]
