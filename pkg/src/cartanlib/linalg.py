"""Exact dense linear algebra over a Field.

All vectors are rows; a linear map given by a matrix M acts as v @ M.
Every routine canonicalizes through reduced row echelon form with
lexicographically-first pivoting, so equal row spaces always produce
bit-identical matrices.
"""

from __future__ import annotations

import numpy as np

from .fields import Field


def rref(field: Field, mat: np.ndarray) -> tuple[np.ndarray, tuple[int, ...]]:
    """Reduced row echelon form; returns (matrix without zero rows, pivot columns)."""
    m = field.reduce(mat.copy())
    rows, cols = m.shape
    pivots: list[int] = []
    r = 0
    for c in range(cols):
        if r == rows:
            break
        pivot_row = None
        for i in range(r, rows):
            if not field.is_zero(m[i, c]):
                pivot_row = i
                break
        if pivot_row is None:
            continue
        if pivot_row != r:
            m[[r, pivot_row]] = m[[pivot_row, r]]
        inv = field.inv(m[r, c])
        m[r] = field.reduce(m[r] * inv)
        for i in range(rows):
            if i != r and not field.is_zero(m[i, c]):
                m[i] = field.reduce(m[i] - m[i, c] * m[r])
        pivots.append(c)
        r += 1
    return m[:r], tuple(pivots)


def rank(field: Field, mat: np.ndarray) -> int:
    if mat.size == 0:
        return 0
    return rref(field, mat)[0].shape[0]


def row_space(field: Field, rows: np.ndarray) -> np.ndarray:
    """Canonical basis matrix of the span of the given rows."""
    if rows.size == 0:
        return field.zeros(0, rows.shape[1] if rows.ndim == 2 else 0)
    return rref(field, rows)[0]


def right_nullspace(field: Field, mat: np.ndarray) -> np.ndarray:
    """Canonical basis (as rows) of {x : mat @ x == 0}."""
    rows, cols = mat.shape
    if rows == 0:
        return np.eye(cols, dtype=np.int64) if field.dtype is np.int64 else _object_eye(field, cols)
    r, pivots = rref(field, mat)
    free = [c for c in range(cols) if c not in pivots]
    basis = field.zeros(len(free), cols)
    for k, c in enumerate(free):
        basis[k, c] = field.one
        for i, pc in enumerate(pivots):
            basis[k, pc] = field.neg(r[i, c])
    return row_space(field, basis)


def left_kernel(field: Field, mat: np.ndarray) -> np.ndarray:
    """Canonical basis of {x row : x @ mat == 0}."""
    return right_nullspace(field, mat.T)


def _object_eye(field: Field, n: int) -> np.ndarray:
    m = field.zeros(n, n)
    for i in range(n):
        m[i, i] = field.one
    return m


def eye(field: Field, n: int) -> np.ndarray:
    if field.dtype is np.int64:
        return np.eye(n, dtype=np.int64)
    return _object_eye(field, n)


def matmul(field: Field, a: np.ndarray, b: np.ndarray) -> np.ndarray:
    return field.reduce(np.dot(a, b))


def in_row_space(field: Field, basis: np.ndarray, pivots: tuple[int, ...], vec: np.ndarray) -> bool:
    return not np.any(residual(field, basis, pivots, vec) != field.zero)


def residual(field: Field, basis: np.ndarray, pivots: tuple[int, ...], vec: np.ndarray) -> np.ndarray:
    """vec minus its projection onto the RREF row space; zero iff vec is in the span."""
    if basis.shape[0] == 0:
        return field.reduce(vec.copy())
    coeffs = vec[list(pivots)]
    return field.reduce(vec - np.dot(coeffs, basis))


def coordinates(field: Field, basis: np.ndarray, pivots: tuple[int, ...], vec: np.ndarray) -> np.ndarray:
    """Coefficients of vec in the RREF basis; raises if vec is outside the span."""
    if basis.shape[0] == 0:
        if np.any(field.reduce(vec) != field.zero):
            raise ValueError("vector not in the zero space")
        return field.zeros(0)
    coeffs = field.reduce(np.array(vec[list(pivots)]))
    if np.any(field.reduce(vec - np.dot(coeffs, basis)) != field.zero):
        raise ValueError("vector not in the row space")
    return coeffs


def trace(field: Field, mat: np.ndarray):
    t = field.zero
    for i in range(mat.shape[0]):
        t = field.add(t, mat[i, i])
    return t
