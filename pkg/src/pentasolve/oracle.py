"""Dense reference solver used as ground truth in tests.

The production solvers never call into this module; it exists so that
every banded result can be checked against an independent O(n^3)
elimination.  Float systems use partial pivoting; exact systems (any
non-float scalars, typically ``fractions.Fraction``) use plain exact
elimination with a row swap to the first nonzero pivot, which suffices
because exact arithmetic cannot lose accuracy to pivot growth.
"""
from __future__ import annotations

from typing import Sequence

from .core import DimensionMismatch, PentaMatrix, SingularMatrix


class DenseMatrix:
    """Row-major square matrix over float or exact scalars."""

    __slots__ = ("n", "rows")

    def __init__(self, rows: Sequence[Sequence]):
        self.rows = [list(r) for r in rows]
        self.n = len(self.rows)
        for r in self.rows:
            if len(r) != self.n:
                raise DimensionMismatch(
                    f"dense matrix must be square, got a row of length "
                    f"{len(r)} in an order-{self.n} matrix")

    @classmethod
    def from_penta(cls, P: PentaMatrix) -> "DenseMatrix":
        return cls(P.to_dense())

    def is_float(self) -> bool:
        return any(isinstance(v, float) for row in self.rows for v in row)


def _pivot_row(rows, col, start, use_abs):
    """Index of the pivot row for a column, or None if the column is dead."""
    if use_abs:
        best, best_mag = None, 0.0
        for r in range(start, len(rows)):
            mag = abs(rows[r][col])
            if mag > best_mag:
                best, best_mag = r, mag
        return best
    for r in range(start, len(rows)):
        if rows[r][col] != 0:
            return r
    return None


def _eliminate(A: DenseMatrix, rhs):
    """Forward elimination on a working copy; returns (rows, rhs, sign).

    Raises SingularMatrix when a column has no usable pivot.  ``rhs`` may
    be None for determinant-only use.
    """
    rows = [list(r) for r in A.rows]
    vec = None if rhs is None else list(rhs)
    use_abs = A.is_float()
    sign = 1
    n = A.n
    for col in range(n):
        piv = _pivot_row(rows, col, col, use_abs)
        if piv is None or rows[piv][col] == 0:
            raise SingularMatrix(f"no pivot available in column {col + 1}")
        if piv != col:
            rows[col], rows[piv] = rows[piv], rows[col]
            if vec is not None:
                vec[col], vec[piv] = vec[piv], vec[col]
            sign = -sign
        prow = rows[col]
        pval = prow[col]
        for r in range(col + 1, n):
            factor = rows[r][col] / pval
            if factor == 0:
                continue
            row = rows[r]
            for j in range(col, n):
                row[j] = row[j] - factor * prow[j]
            if vec is not None:
                vec[r] = vec[r] - factor * vec[col]
    return rows, vec, sign


def dense_solve(A: DenseMatrix, y: Sequence) -> list:
    """Solve ``A x = y`` by Gaussian elimination."""
    if len(y) != A.n:
        raise DimensionMismatch(
            f"right-hand side has length {len(y)}, expected {A.n}")
    rows, vec, _ = _eliminate(A, y)
    n = A.n
    x = [None] * n
    for i in range(n - 1, -1, -1):
        acc = vec[i]
        row = rows[i]
        for j in range(i + 1, n):
            acc = acc - row[j] * x[j]
        x[i] = acc / row[i]
    return x


def dense_det(A: DenseMatrix):
    """Determinant as the signed product of elimination pivots.

    Returns zero (never raises) for a singular matrix.
    """
    try:
        rows, _, sign = _eliminate(A, None)
    except SingularMatrix:
        zero = A.rows[0][0] * 0
        return zero
    det = rows[0][0]
    for i in range(1, A.n):
        det = det * rows[i][i]
    return det * sign
