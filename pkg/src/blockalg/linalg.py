"""Exact Gaussian elimination over the rationals.

Matrices are lists of rows of Fractions.  Only what the row systems here
need: reduced row echelon form, rank, and a canonical nullspace basis
(free-variable parametrization, one basis vector per free column, taken in
column order).  No pivoting heuristics are required since arithmetic is exact.
"""

from __future__ import annotations

from fractions import Fraction

Matrix = list[list[Fraction]]


def rref(matrix: Matrix) -> tuple[Matrix, list[int]]:
    """Reduced row echelon form (copy) and the list of pivot column indices."""
    m = [[Fraction(x) for x in row] for row in matrix]
    if not m:
        return [], []
    rows, cols = len(m), len(m[0])
    pivots: list[int] = []
    r = 0
    for c in range(cols):
        pivot_row = None
        for rr in range(r, rows):
            if m[rr][c]:
                pivot_row = rr
                break
        if pivot_row is None:
            continue
        m[r], m[pivot_row] = m[pivot_row], m[r]
        inv = 1 / m[r][c]
        m[r] = [x * inv for x in m[r]]
        for rr in range(rows):
            if rr != r and m[rr][c]:
                factor = m[rr][c]
                m[rr] = [x - factor * y for x, y in zip(m[rr], m[r])]
        pivots.append(c)
        r += 1
        if r == rows:
            break
    return m, pivots


def rank(matrix: Matrix) -> int:
    return len(rref(matrix)[1])


def nullspace(matrix: Matrix, ncols: int | None = None) -> list[list[Fraction]]:
    """Canonical basis of {x : matrix @ x = 0}.

    Each basis vector carries 1 in one free column and 0 in the others, with
    pivot columns back-filled; vectors are ordered by their free column.
    An empty matrix (no constraints) yields the standard basis.
    """
    if not matrix:
        if ncols is None:
            raise ValueError("ncols is required for an empty constraint set")
        cols = ncols
        echelon: Matrix = []
        pivots: list[int] = []
    else:
        cols = len(matrix[0]) if ncols is None else ncols
        echelon, pivots = rref(matrix)
    pivot_set = set(pivots)
    free_cols = [c for c in range(cols) if c not in pivot_set]
    basis = []
    for fc in free_cols:
        vec = [Fraction(0)] * cols
        vec[fc] = Fraction(1)
        for r, pc in enumerate(pivots):
            vec[pc] = -echelon[r][fc]
        basis.append(vec)
    return basis
