"""Exact linear algebra over a cyclotomic field: rank, nullspace, solve."""

from __future__ import annotations

from fractions import Fraction
from math import lcm

from .cycfield import CycField, CycNum


class SingularSystemError(ArithmeticError):
    """A linear solve that must be nonsingular was not."""


def _clear_denominators(row):
    """Scale a row of CycNum by the lcm of all coordinate denominators."""
    denoms = [c.denominator for x in row for c in x.coeffs if c != 0]
    if not denoms:
        return row
    m = lcm(*denoms) if len(denoms) > 1 else denoms[0]
    if m == 1:
        return row
    return [x * m for x in row]


def rank(matrix: list[list[CycNum]]) -> int:
    """Rank by fraction-free (Bareiss) elimination over the ring of integers of the field.

    Rows are first scaled integral; each update divides exactly by the previous
    pivot, which keeps entries in the ring and bounds coefficient growth.
    """
    if not matrix:
        return 0
    m = [_clear_denominators(list(row)) for row in matrix]
    rows, cols = len(m), len(m[0])
    r = 0
    prev_pivot = None
    for c in range(cols):
        pivot_row = None
        for i in range(r, rows):
            if not m[i][c].is_zero():
                pivot_row = i
                break
        if pivot_row is None:
            continue
        m[r], m[pivot_row] = m[pivot_row], m[r]
        piv = m[r][c]
        for i in range(r + 1, rows):
            for j in range(c + 1, cols):
                val = m[i][j] * piv - m[i][c] * m[r][j]
                if prev_pivot is not None:
                    val = val / prev_pivot
                m[i][j] = val
            m[i][c] = piv.field.zero()
        prev_pivot = piv
        r += 1
        if r == rows:
            break
    return r


def _rref(matrix: list[list[CycNum]]):
    """Reduced row echelon form (field arithmetic); returns (rows, pivot_cols)."""
    m = [list(row) for row in matrix]
    if not m:
        return m, []
    rows, cols = len(m), len(m[0])
    pivots = []
    r = 0
    for c in range(cols):
        pivot_row = None
        for i in range(r, rows):
            if not m[i][c].is_zero():
                pivot_row = i
                break
        if pivot_row is None:
            continue
        m[r], m[pivot_row] = m[pivot_row], m[r]
        inv = m[r][c].inverse()
        m[r] = [x * inv for x in m[r]]
        for i in range(rows):
            if i != r and not m[i][c].is_zero():
                f = m[i][c]
                m[i] = [a - f * b for a, b in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
        if r == rows:
            break
    return m, pivots


def nullspace(matrix: list[list[CycNum]], field: CycField, ncols: int) -> list[list[CycNum]]:
    """Basis of the right nullspace; deterministic (free columns in order)."""
    if not matrix:
        return [
            [field.one() if i == j else field.zero() for i in range(ncols)]
            for j in range(ncols)
        ]
    m, pivots = _rref(matrix)
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for fc in free:
        vec = [field.zero()] * ncols
        vec[fc] = field.one()
        for r, pc in enumerate(pivots):
            vec[pc] = -m[r][fc]
        basis.append(vec)
    return basis


def solve(matrix: list[list[CycNum]], rhs: list[CycNum], field: CycField) -> list[CycNum]:
    """Solve A x = b for square nonsingular A; SingularSystemError otherwise."""
    n = len(matrix)
    if any(len(row) != n for row in matrix):
        raise ValueError("solve requires a square matrix")
    aug = [list(row) + [rhs[i]] for i, row in enumerate(matrix)]
    m, pivots = _rref(aug)
    if len(pivots) != n or any(p >= n for p in pivots):
        raise SingularSystemError("singular linear system")
    x = [field.zero()] * n
    for r, pc in enumerate(pivots):
        x[pc] = m[r][n]
    return x
