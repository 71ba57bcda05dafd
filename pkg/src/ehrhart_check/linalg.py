"""Exact rank and determinant computations.

Everything here works on Python integers, which are arbitrary precision.
Dense matrices are lists of rows; sparse matrices are iterables of
``{column: value}`` dicts with nonzero values only.
"""

import logging
from collections.abc import Iterable, Sequence
from math import gcd

logger = logging.getLogger(__name__)

SparseRow = dict[int, int]

# 2**61 - 1, a Mersenne prime; used only for the modular pre-pass.
DEFAULT_PRIME = 2305843009213693951


def bareiss_det(matrix: Sequence[Sequence[int]]) -> int:
    """Determinant of a square integer matrix by fraction-free elimination."""
    n = len(matrix)
    if n == 0:
        return 1
    m = [list(row) for row in matrix]
    if any(len(row) != n for row in m):
        raise ValueError("matrix is not square")

    sign = 1
    prev = 1
    for k in range(n - 1):
        if m[k][k] == 0:
            for i in range(k + 1, n):
                if m[i][k] != 0:
                    m[k], m[i] = m[i], m[k]
                    sign = -sign
                    break
            else:
                return 0
        pivot = m[k][k]
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                m[i][j] = (pivot * m[i][j] - m[i][k] * m[k][j]) // prev
            m[i][k] = 0
        prev = pivot
    return sign * m[n - 1][n - 1]


def bareiss_rank(matrix: Sequence[Sequence[int]]) -> int:
    """Rank over the rationals of a dense integer matrix (Bareiss echelon form)."""
    m = [list(row) for row in matrix]
    rows = len(m)
    cols = len(m[0]) if m else 0

    rank = 0
    prev = 1
    for c in range(cols):
        if rank == rows:
            break
        pivot_row = next((i for i in range(rank, rows) if m[i][c] != 0), None)
        if pivot_row is None:
            continue
        m[rank], m[pivot_row] = m[pivot_row], m[rank]
        pivot = m[rank][c]
        top = m[rank]
        for i in range(rank + 1, rows):
            row = m[i]
            lead = row[c]
            for j in range(c + 1, cols):
                row[j] = (pivot * row[j] - lead * top[j]) // prev
            row[c] = 0
        prev = pivot
        rank += 1
    return rank


def _primitive(row: SparseRow) -> SparseRow:
    g = 0
    for value in row.values():
        g = gcd(g, value)
        if g == 1:
            return row
    return {c: v // g for c, v in row.items()}


def sparse_rank(rows: Iterable[SparseRow]) -> int:
    """Rank over the rationals of a sparse integer matrix.

    Rows are reduced one at a time against the pivots found so far using
    fraction-free row combinations; each reduced row is divided by its
    content so entries stay small.
    """
    pivots: dict[int, SparseRow] = {}
    for original in rows:
        row = {c: v for c, v in original.items() if v}
        while row:
            lead = min(row)
            pivot = pivots.get(lead)
            if pivot is None:
                pivots[lead] = _primitive(row)
                break
            a = pivot[lead]
            b = row[lead]
            combined: SparseRow = {}
            for c in row.keys() | pivot.keys():
                value = a * row.get(c, 0) - b * pivot.get(c, 0)
                if value:
                    combined[c] = value
            row = _primitive(combined) if combined else combined
    return len(pivots)


def modular_rank(rows: Iterable[SparseRow], prime: int = DEFAULT_PRIME) -> int:
    """Rank over GF(prime). Never exceeds the rank over the rationals."""
    pivots: dict[int, SparseRow] = {}
    for original in rows:
        row = {c: v % prime for c, v in original.items() if v % prime}
        while row:
            lead = min(row)
            pivot = pivots.get(lead)
            if pivot is None:
                inverse = pow(row[lead], -1, prime)
                pivots[lead] = {c: v * inverse % prime for c, v in row.items()}
                break
            factor = row[lead]
            for c, v in pivot.items():
                value = (row.get(c, 0) - factor * v) % prime
                if value:
                    row[c] = value
                else:
                    row.pop(c, None)
    return len(pivots)


def exact_rank(rows: Sequence[SparseRow], ncols: int, prepass: bool = True) -> int:
    """Rank over the rationals, optionally short-circuited by a modular pass.

    The modular rank is a lower bound for the rational rank, so a full
    modular rank settles the answer; anything else is recomputed exactly.
    """
    if not rows or ncols == 0:
        return 0
    full = min(len(rows), ncols)
    if prepass:
        if modular_rank(rows) == full:
            return full
        logger.debug("modular pre-pass inconclusive on %dx%d block", len(rows), ncols)
    return sparse_rank(rows)


def dense_to_sparse(matrix: Sequence[Sequence[int]]) -> list[SparseRow]:
    """Convert a dense matrix to sparse rows."""
    return [{j: v for j, v in enumerate(row) if v} for row in matrix]
