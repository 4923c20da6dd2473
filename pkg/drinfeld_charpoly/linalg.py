"""
Matrices over a commutative ring: L, L[y] or W_k.

The ring object supplies zero, one, add, sub, neg and mul; FieldTower,
YPolyRing and WkRing all qualify.
"""

import logging
from dataclasses import dataclass
from typing import Any, Callable, Sequence

logger = logging.getLogger(__name__)


class MatrixShapeError(ValueError):
    """Exception for mismatched dimensions or coefficient rings."""
    pass


@dataclass(frozen=True)
class RingMatrix:
    """Row-major matrix whose entries all belong to one ring."""
    ring: Any
    entries: tuple[tuple[Any, ...], ...]

    def __post_init__(self):
        widths = {len(row) for row in self.entries}
        if len(widths) > 1:
            raise MatrixShapeError(f"ragged matrix rows: widths {sorted(widths)}")

    @classmethod
    def from_rows(cls, ring: Any, rows: Sequence[Sequence[Any]]) -> "RingMatrix":
        return cls(ring, tuple(tuple(row) for row in rows))

    @property
    def rows(self) -> int:
        return len(self.entries)

    @property
    def cols(self) -> int:
        return len(self.entries[0]) if self.entries else 0

    @property
    def is_square(self) -> bool:
        return self.rows == self.cols

    def __getitem__(self, index: tuple[int, int]) -> Any:
        i, j = index
        return self.entries[i][j]


def identity(ring: Any, size: int) -> RingMatrix:
    return scalar_matrix(ring, ring.one, size)


def scalar_matrix(ring: Any, c: Any, size: int) -> RingMatrix:
    return RingMatrix(ring, tuple(
        tuple(c if i == j else ring.zero for j in range(size)) for i in range(size)
    ))


def zero_matrix(ring: Any, rows: int, cols: int) -> RingMatrix:
    return RingMatrix(ring, tuple(tuple(ring.zero for _ in range(cols)) for _ in range(rows)))


def _same_ring(a: RingMatrix, b: RingMatrix) -> None:
    if a.ring != b.ring:
        raise MatrixShapeError(f"matrices over different rings: {a.ring!r} and {b.ring!r}")


def mat_mul(a: RingMatrix, b: RingMatrix) -> RingMatrix:
    """
    Schoolbook matrix product.

    Raises:
        MatrixShapeError: If the inner dimensions or the rings differ
    """
    _same_ring(a, b)
    if a.cols != b.rows:
        raise MatrixShapeError(f"cannot multiply {a.rows}x{a.cols} by {b.rows}x{b.cols}")
    ring = a.ring
    columns = list(zip(*b.entries)) if b.entries else [() for _ in range(b.cols)]
    out = []
    for row in a.entries:
        out_row = []
        for col in columns:
            acc = ring.zero
            for x, y in zip(row, col):
                acc = ring.add(acc, ring.mul(x, y))
            out_row.append(acc)
        out.append(tuple(out_row))
    return RingMatrix(ring, tuple(out))


def mat_add(a: RingMatrix, b: RingMatrix) -> RingMatrix:
    _same_ring(a, b)
    if (a.rows, a.cols) != (b.rows, b.cols):
        raise MatrixShapeError(f"cannot add {a.rows}x{a.cols} and {b.rows}x{b.cols}")
    ring = a.ring
    return RingMatrix(ring, tuple(
        tuple(ring.add(x, y) for x, y in zip(ra, rb)) for ra, rb in zip(a.entries, b.entries)
    ))


def mat_map(m: RingMatrix, fn: Callable[[Any], Any], ring: Any) -> RingMatrix:
    """Apply fn entry-wise, landing in the given ring."""
    return RingMatrix(ring, tuple(tuple(fn(x) for x in row) for row in m.entries))


def transpose(m: RingMatrix) -> RingMatrix:
    return RingMatrix(m.ring, tuple(zip(*m.entries)))


def permute(m: RingMatrix, perm: Sequence[int]) -> RingMatrix:
    """P·M·P^-1 for the permutation sending index i to perm[i]."""
    if not m.is_square or sorted(perm) != list(range(m.rows)):
        raise MatrixShapeError("permute needs a square matrix and a permutation of its indices")
    return RingMatrix(m.ring, tuple(tuple(m.entries[pi][pj] for pj in perm) for pi in perm))


def product_chain(matrices: Sequence[RingMatrix]) -> RingMatrix:
    """
    Ordered product M_s···M_1 of matrices given as [M_1, ..., M_s].

    Neighbours are paired level by level (a subproduct tree), so the
    operand sizes stay balanced.

    Raises:
        MatrixShapeError: On an empty chain
    """
    if not matrices:
        raise MatrixShapeError("product_chain needs at least one matrix")
    level = list(matrices)
    while len(level) > 1:
        paired = [mat_mul(level[i + 1], level[i]) for i in range(0, len(level) - 1, 2)]
        if len(level) % 2:
            paired.append(level[-1])
        level = paired
    return level[0]


def berkowitz_charpoly(m: RingMatrix) -> list[Any]:
    """
    Division-free characteristic polynomial det(Z·I - M).

    The principal submatrices are grown one row at a time; each step
    multiplies the running coefficient vector by a Toeplitz matrix built
    from R·A^j·C.

    Args:
        m: Square matrix over a commutative ring

    Returns:
        Coefficients c_0, ..., c_r (little-endian, c_r = 1)
    """
    if not m.is_square:
        raise MatrixShapeError(f"characteristic polynomial of a {m.rows}x{m.cols} matrix")
    ring = m.ring
    a = m.entries
    coeffs = [ring.one]  # descending in Z
    for i in range(m.rows):
        column = [a[row][i] for row in range(i)]
        row_vec = a[i][:i]
        toeplitz = [ring.one, ring.neg(a[i][i])]
        w = column
        for _ in range(i):
            acc = ring.zero
            for x, y in zip(row_vec, w):
                acc = ring.add(acc, ring.mul(x, y))
            toeplitz.append(ring.neg(acc))
            w = [_dot(ring, a[row][:i], w) for row in range(i)]

        new = []
        for s in range(i + 2):
            acc = ring.zero
            for j in range(min(s + 1, len(coeffs))):
                acc = ring.add(acc, ring.mul(toeplitz[s - j], coeffs[j]))
            new.append(acc)
        coeffs = new
    return coeffs[::-1]


def _dot(ring: Any, xs: Sequence[Any], ys: Sequence[Any]) -> Any:
    acc = ring.zero
    for x, y in zip(xs, ys):
        acc = ring.add(acc, ring.mul(x, y))
    return acc


def mat_poly_eval(coeffs: Sequence[Any], m: RingMatrix) -> RingMatrix:
    """Evaluate sum c_i M^i (little-endian ring coefficients) by Horner's rule."""
    ring = m.ring
    size = m.rows
    acc = zero_matrix(ring, size, size)
    for c in reversed(coeffs):
        acc = mat_add(mat_mul(acc, m), scalar_matrix(ring, c, size))
    return acc
