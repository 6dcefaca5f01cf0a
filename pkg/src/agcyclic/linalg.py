"""Row reduction and kernels for integer-encoded matrices over a GF field.

Matrices cross the API as 2-D numpy int64 arrays holding element values in
[0, q); the row operations themselves run on plain Python ints, which is
faster at the small shapes used throughout (n <= 16).
"""

from __future__ import annotations

import numpy as np

from .gf import GF


def as_matrix(field: GF, rows) -> np.ndarray:
    arr = np.array(
        [[getattr(e, "val", e) for e in row] for row in rows], dtype=np.int64
    )
    if arr.ndim == 1:
        arr = arr.reshape(0, 0) if arr.size == 0 else arr.reshape(1, -1)
    if arr.size and ((arr < 0).any() or (arr >= field.q).any()):
        raise ValueError("matrix entry out of range for the field")
    return arr


def _rref_rows(field: GF, rows: list[list[int]], ncols: int):
    mul, sub, inv = field.mul_i, field.sub_i, field.inv_i
    pivots = []
    r = 0
    nrows = len(rows)
    for c in range(ncols):
        pivot = -1
        for i in range(r, nrows):
            if rows[i][c]:
                pivot = i
                break
        if pivot < 0:
            continue
        if pivot != r:
            rows[r], rows[pivot] = rows[pivot], rows[r]
        prow = rows[r]
        pv = prow[c]
        if pv != 1:
            pinv = inv(pv)
            prow = [mul(x, pinv) for x in prow]
            rows[r] = prow
        for i in range(nrows):
            if i != r:
                f = rows[i][c]
                if f:
                    ri = rows[i]
                    rows[i] = [sub(ri[j], mul(f, prow[j])) for j in range(ncols)]
        pivots.append(c)
        r += 1
        if r == nrows:
            break
    return rows[:r], tuple(pivots)


def rref(field: GF, mat: np.ndarray) -> tuple[np.ndarray, tuple[int, ...]]:
    """Reduced row echelon form with zero rows dropped, and the pivot columns."""
    ncols = mat.shape[1]
    rows = [list(map(int, row)) for row in mat]
    reduced, pivots = _rref_rows(field, rows, ncols)
    if not reduced:
        return np.zeros((0, ncols), dtype=np.int64), pivots
    return np.array(reduced, dtype=np.int64), pivots


def rank(field: GF, mat: np.ndarray) -> int:
    return rref(field, mat)[0].shape[0]


def reduce_against(field: GF, basis: np.ndarray, pivots: tuple[int, ...], vec) -> list[int]:
    """Residual of vec after elimination against an rref basis."""
    mul, sub = field.mul_i, field.sub_i
    v = [int(x) for x in vec]
    n = len(v)
    for i, c in enumerate(pivots):
        f = v[c]
        if f:
            row = basis[i]
            v = [sub(v[j], mul(f, int(row[j]))) for j in range(n)]
    return v


def in_row_space(field: GF, basis: np.ndarray, pivots: tuple[int, ...], vec) -> bool:
    return not any(reduce_against(field, basis, pivots, vec))


def solve_coordinates(field: GF, mat: np.ndarray, vec) -> np.ndarray | None:
    """Coefficients c with c . mat = vec, or None when vec is outside the row space."""
    nrows, ncols = mat.shape
    rows = [list(map(int, row)) + [1 if j == i else 0 for j in range(nrows)]
            for i, row in enumerate(mat)]
    reduced, pivots = _rref_rows(field, rows, ncols + nrows)
    mul, sub, add = field.mul_i, field.sub_i, field.add_i
    v = [int(x) for x in vec]
    coeff = [0] * nrows
    for i, c in enumerate(pivots):
        if c >= ncols:
            break
        f = v[c]
        if f:
            row = reduced[i]
            v = [sub(v[j], mul(f, row[j])) for j in range(ncols)]
            coeff = [add(coeff[j], mul(f, row[ncols + j])) for j in range(nrows)]
    if any(v):
        return None
    return np.array(coeff, dtype=np.int64)


def left_kernel(field: GF, mat: np.ndarray) -> np.ndarray:
    """Basis (as rows) of {v : v . mat = 0}."""
    nrows, ncols = mat.shape
    rows = [list(map(int, row)) + [1 if j == i else 0 for j in range(nrows)]
            for i, row in enumerate(mat)]
    reduced, _ = _rref_rows(field, rows, ncols + nrows)
    out = [row[ncols:] for row in reduced if not any(row[:ncols])]
    if not out:
        return np.zeros((0, nrows), dtype=np.int64)
    return np.array(out, dtype=np.int64)


def right_kernel(field: GF, mat: np.ndarray) -> np.ndarray:
    return left_kernel(field, mat.T)
