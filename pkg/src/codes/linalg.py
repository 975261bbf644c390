"""Gaussian elimination over F_q.

Pivoting always takes the lowest-index usable row for the next column in
scan order, so reduced forms and everything built from them are
reproducible bit for bit. GF(2) matrices are reduced bit-packed, prime
fields with in-place `% p` updates and extension fields through the
field tables.

Elimination runs forward only (rows below the pivot, columns from the
pivot on). `row_reduce` clears the rows above afterwards; `solve`,
`rank` and `pivot_columns` stop at the echelon form.
"""

from typing import List, Optional, Sequence, Tuple

import numpy as np

from gf import FiniteField

from .exceptions import RankDeficient


def _scan_permutation(cols: int, order: Sequence[int]) -> Tuple[List[int], int]:
    """Scanned columns first (in scan order), carried columns after them."""
    scanned = [int(c) for c in order]
    seen = set(scanned)
    return scanned + [c for c in range(cols) if c not in seen], len(scanned)


class _BinaryEchelon:
    def __init__(self, matrix: np.ndarray):
        self.cols = matrix.shape[1]
        self.packed = np.packbits(matrix.astype(np.uint8), axis=1)

    def forward(self, scan: int) -> List[int]:
        packed = self.packed
        rows = packed.shape[0]
        pivots: List[int] = []
        r = 0
        for j in range(scan):
            if r == rows:
                break
            byte, mask = j >> 3, np.uint8(0x80 >> (j & 7))
            candidates = np.flatnonzero(packed[r:, byte] & mask)
            if candidates.size == 0:
                continue
            pivot = r + int(candidates[0])
            if pivot != r:
                packed[[r, pivot]] = packed[[pivot, r]]
            below = r + 1 + np.flatnonzero(packed[r + 1:, byte] & mask)
            if below.size:
                packed[below, byte:] ^= packed[r, byte:]
            pivots.append(j)
            r += 1
        return pivots

    def backward(self, pivots: List[int]) -> None:
        packed = self.packed
        for i in range(len(pivots) - 1, 0, -1):
            j = pivots[i]
            byte, mask = j >> 3, np.uint8(0x80 >> (j & 7))
            above = np.flatnonzero(packed[:i, byte] & mask)
            if above.size:
                packed[above, byte:] ^= packed[i, byte:]

    def dense(self) -> np.ndarray:
        return np.unpackbits(self.packed, axis=1, count=self.cols).astype(np.int64)


class _FieldEchelon:
    def __init__(self, field: FiniteField, matrix: np.ndarray):
        self.field = field
        self.work = matrix.copy()

    def _scale(self, row: np.ndarray, factor: int) -> np.ndarray:
        if self.field.s == 1:
            return (row * factor) % self.field.p
        return self.field.mul(factor, row)

    def _eliminate(self, rows: slice, j: int, pivot_row: int) -> None:
        """rows[j:] -= rows[j] * work[pivot_row, j:] on the given block."""
        work = self.work
        factors = work[rows, j]
        if not np.any(factors):
            return
        lead = work[pivot_row, j:]
        if self.field.s == 1:
            block = work[rows, j:]
            block -= np.multiply.outer(factors, lead)
            block %= self.field.p
            return
        hits = np.flatnonzero(factors) + (rows.start or 0)
        work[hits, j:] = self.field.sub(work[hits, j:], self.field.mul(work[hits, j][:, None], lead[None, :]))

    def forward(self, scan: int) -> List[int]:
        work = self.work
        rows = work.shape[0]
        pivots: List[int] = []
        r = 0
        for j in range(scan):
            if r == rows:
                break
            candidates = np.flatnonzero(work[r:, j])
            if candidates.size == 0:
                continue
            pivot = r + int(candidates[0])
            if pivot != r:
                work[[r, pivot]] = work[[pivot, r]]
            lead = int(work[r, j])
            if lead != 1:
                work[r, j:] = self._scale(work[r, j:], int(self.field.inv(lead)))
            self._eliminate(slice(r + 1, rows), j, r)
            pivots.append(j)
            r += 1
        return pivots

    def backward(self, pivots: List[int]) -> None:
        for i in range(len(pivots) - 1, 0, -1):
            self._eliminate(slice(0, i), pivots[i], i)

    def dense(self) -> np.ndarray:
        return self.work


def _echelon(field: FiniteField, matrix: np.ndarray, perm: List[int]):
    permuted = matrix[:, perm]
    if field.q == 2:
        return _BinaryEchelon(permuted)
    return _FieldEchelon(field, permuted)


def _unpermute(permuted: np.ndarray, perm: List[int]) -> np.ndarray:
    result = np.empty_like(permuted)
    result[:, perm] = permuted
    return result


def _as_matrix(matrix: np.ndarray) -> np.ndarray:
    m = np.asarray(matrix, dtype=np.int64)
    if m.ndim != 2:
        raise ValueError("expected a 2-D matrix")
    return m


def echelon_pivots(
    field: FiniteField,
    matrix: np.ndarray,
    column_order: Optional[Sequence[int]] = None,
) -> List[int]:
    """Pivot columns of the forward elimination, without the reduced matrix."""
    m = _as_matrix(matrix)
    if m.size == 0:
        return []
    perm, scan = _scan_permutation(m.shape[1], range(m.shape[1]) if column_order is None else column_order)
    return [perm[j] for j in _echelon(field, m, perm).forward(scan)]


def row_reduce(
    field: FiniteField,
    matrix: np.ndarray,
    column_order: Optional[Sequence[int]] = None,
) -> Tuple[np.ndarray, List[int]]:
    """Reduced row echelon form and pivot columns.

    Args:
        column_order: columns to pivot on, in scan order (default: all, left to right).
            Columns left out are carried along but never chosen as pivots.

    Returns:
        (reduced, pivots): row i of `reduced` has a 1 in column pivots[i] and every
        other row is 0 there; rows past len(pivots) are zero on the scanned columns.
    """
    m = _as_matrix(matrix)
    if m.size == 0:
        return m.copy(), []
    perm, scan = _scan_permutation(m.shape[1], range(m.shape[1]) if column_order is None else column_order)
    echelon = _echelon(field, m, perm)
    positions = echelon.forward(scan)
    echelon.backward(positions)
    return _unpermute(echelon.dense(), perm), [perm[j] for j in positions]


def rank(field: FiniteField, matrix: np.ndarray) -> int:
    return len(echelon_pivots(field, matrix))


def pivot_columns(field: FiniteField, matrix: np.ndarray) -> List[int]:
    """Lowest-index set of columns spanning the column space."""
    return echelon_pivots(field, matrix)


def null_space(field: FiniteField, matrix: np.ndarray) -> np.ndarray:
    """Rows spanning {x : matrix @ x^T = 0}, one per free column."""
    m = np.asarray(matrix, dtype=np.int64)
    cols = m.shape[1]
    if m.shape[0] == 0:
        return np.eye(cols, dtype=np.int64)
    reduced, pivots = row_reduce(field, m)
    pivot_set = set(pivots)
    free = [c for c in range(cols) if c not in pivot_set]
    basis = np.zeros((len(free), cols), dtype=np.int64)
    if not free:
        return basis
    basis[np.arange(len(free)), free] = 1
    if pivots:
        basis[:, pivots] = field.neg(reduced[:len(pivots)][:, free]).T
    return basis


def solve(field: FiniteField, a: np.ndarray, b: np.ndarray) -> Optional[Tuple[np.ndarray, List[int]]]:
    """One solution x of a @ x^T = b (free variables set to 0), or None if inconsistent.

    Returns (x, pivots) so callers can test uniqueness via len(pivots).
    """
    a = np.asarray(a, dtype=np.int64)
    b = np.asarray(b, dtype=np.int64).reshape(-1)
    rows, cols = a.shape
    augmented = np.concatenate([a, b[:, None]], axis=1)
    perm = list(range(cols + 1))
    echelon = _echelon(field, augmented, perm)
    pivots = echelon.forward(cols)
    upper = echelon.dense()
    r = len(pivots)
    if np.any(upper[r:, cols] != 0):
        return None
    x = np.zeros(cols, dtype=np.int64)
    rhs = upper[:r, cols].copy()
    for i in range(r - 1, -1, -1):
        j = pivots[i]
        value = int(rhs[i])
        x[j] = value
        if not value or not i:
            continue
        if field.s == 1:
            rhs[:i] -= upper[:i, j] * value
            rhs[:i] %= field.p
        else:
            rhs[:i] = field.sub(rhs[:i], field.mul(upper[:i, j], value))
    return x, pivots


def inverse(field: FiniteField, square: np.ndarray) -> np.ndarray:
    """Inverse of a square matrix over F_q."""
    b = np.asarray(square, dtype=np.int64)
    size = b.shape[0]
    if b.shape != (size, size):
        raise ValueError("inverse expects a square matrix")
    augmented = np.concatenate([b, np.eye(size, dtype=np.int64)], axis=1)
    reduced, pivots = row_reduce(field, augmented, column_order=range(size))
    if len(pivots) < size:
        raise RankDeficient(f"matrix has rank {len(pivots)} < {size}", len(pivots), size)
    return reduced[:, size:].copy()
