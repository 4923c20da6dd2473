"""Dense linear algebra over F_q."""

import logging
from dataclasses import dataclass, field
from typing import TYPE_CHECKING, Optional, Sequence

import numpy as np

from . import fq_field

if TYPE_CHECKING:
    from .fq_field import FqField

logger = logging.getLogger(__name__)

Matrix = list[list[int]]

# int64 products of two residues must not overflow
_NUMPY_PRIME_LIMIT = 2 ** 31


@dataclass
class LinearSolution:
    """Outcome of solving A x = b over F_q."""
    consistent: bool
    unique: bool
    values: list[int] = field(default_factory=list)


def _rref_numpy(p: int, rows: Sequence[Sequence[int]], ncols: int) -> tuple[Matrix, list[int]]:
    m = np.array(rows, dtype=np.int64).reshape(len(rows), ncols) % p
    nrows = m.shape[0]
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        if r == nrows:
            break
        nonzero = np.nonzero(m[r:, c])[0]
        if nonzero.size == 0:
            continue
        pivot = r + int(nonzero[0])
        if pivot != r:
            m[[r, pivot]] = m[[pivot, r]]
        inv = pow(int(m[r, c]), p - 2, p)
        m[r] = (m[r] * inv) % p
        column = m[:, c].copy()
        column[r] = 0
        m = (m - np.outer(column, m[r])) % p
        pivots.append(c)
        r += 1
    return [[int(x) for x in row] for row in m], pivots


def _rref_generic(K: "FqField", rows: Sequence[Sequence[int]], ncols: int) -> tuple[Matrix, list[int]]:
    m = [list(row) for row in rows]
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        if r == len(m):
            break
        pivot = next((i for i in range(r, len(m)) if m[i][c]), None)
        if pivot is None:
            continue
        m[r], m[pivot] = m[pivot], m[r]
        inv = K.inv(m[r][c])
        pivot_row = [K.mul(inv, x) for x in m[r]]
        m[r] = pivot_row
        for i in range(len(m)):
            if i != r and m[i][c]:
                factor = m[i][c]
                m[i] = [K.sub(x, K.mul(factor, y)) for x, y in zip(m[i], pivot_row)]
        pivots.append(c)
        r += 1
    return m, pivots


def rref(K: "FqField", rows: Sequence[Sequence[int]], ncols: Optional[int] = None) -> tuple[Matrix, list[int]]:
    """
    Reduced row echelon form.

    Args:
        K: Coefficient field
        rows: Matrix as a list of rows of F_q codes
        ncols: Column count (needed when rows is empty)

    Returns:
        Tuple of (reduced rows, pivot column indices)
    """
    if ncols is None:
        ncols = len(rows[0]) if rows else 0
    if K.is_prime_field and K.p < _NUMPY_PRIME_LIMIT:
        return _rref_numpy(K.p, rows, ncols)
    return _rref_generic(K, rows, ncols)


def rank(K: "FqField", rows: Sequence[Sequence[int]], ncols: Optional[int] = None) -> int:
    return len(rref(K, rows, ncols)[1])


def invert(K: "FqField", matrix: Sequence[Sequence[int]]) -> Matrix:
    """
    Inverse of a square matrix.

    Raises:
        FieldError: If the matrix is singular
    """
    size = len(matrix)
    augmented = [list(row) + [1 if i == j else 0 for j in range(size)] for i, row in enumerate(matrix)]
    reduced, pivots = rref(K, augmented, 2 * size)
    if pivots[:size] != list(range(size)):
        raise fq_field.FieldError("matrix is singular")
    return [row[size:] for row in reduced[:size]]


def mat_vec(K: "FqField", matrix: Sequence[Sequence[int]], vector: Sequence[int]) -> list[int]:
    if K.is_prime_field:
        p = K.p
        return [sum(a * b for a, b in zip(row, vector)) % p for row in matrix]
    out = []
    for row in matrix:
        acc = 0
        for a, b in zip(row, vector):
            if a and b:
                acc = K.add(acc, K.mul(a, b))
        out.append(acc)
    return out


def solve(K: "FqField", rows: Sequence[Sequence[int]], rhs: Sequence[int], unknowns: int) -> LinearSolution:
    """Solve rows * x = rhs, reporting inconsistency and non-uniqueness."""
    augmented = [list(row) + [b] for row, b in zip(rows, rhs)]
    reduced, pivots = rref(K, augmented, unknowns + 1)
    if unknowns in pivots:
        return LinearSolution(consistent=False, unique=False)
    if len(pivots) < unknowns:
        return LinearSolution(consistent=True, unique=False)
    return LinearSolution(consistent=True, unique=True, values=[reduced[i][unknowns] for i in range(unknowns)])


def first_dependency(K: "FqField", vectors: Sequence[Sequence[int]]) -> Optional[list[int]]:
    """
    First linear dependency in a sequence of vectors.

    Returns:
        Coefficients c_0..c_{j-1} with v_j = sum c_i v_i for the least such j,
        or None when the vectors are independent
    """
    if not vectors:
        return None
    dim = len(vectors[0])
    columns = [[vec[row] for vec in vectors] for row in range(dim)]
    reduced, pivots = rref(K, columns, len(vectors))
    for j in range(len(vectors)):
        if j >= len(pivots) or pivots[j] != j:
            return [reduced[i][j] for i in range(j)]
    return None
