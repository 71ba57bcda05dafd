"""Integer lattices: Hermite and Smith normal forms, indices, bases and coordinates.

Conventions used throughout the package:

* Lattices are generated by the *rows* of an :class:`IntMatrix`.
* :func:`hermite_normal_form` works on *columns*: ``m @ u == h`` with ``h``
  lower-triangular in column-echelon form, pivots positive and the entries
  left of each pivot reduced into ``[0, pivot)``.
* :func:`smith_normal_form` returns ``left @ m @ right == diag``.
"""

from collections.abc import Sequence
from dataclasses import dataclass
from math import prod
from typing import Literal

from .errors import DimensionMismatchError, NotInLatticeError

Vector = tuple[int, ...]

INFINITE: Literal["infinite"] = "infinite"


@dataclass(frozen=True)
class IntMatrix:
    """Exact integer matrix stored row-major."""

    rows: int
    cols: int
    entries: tuple[int, ...]

    def __post_init__(self):
        if len(self.entries) != self.rows * self.cols:
            raise ValueError(
                f"expected {self.rows * self.cols} entries, got {len(self.entries)}"
            )

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[int]], cols: int | None = None) -> "IntMatrix":
        """Build from a list of rows. ``cols`` is needed only for zero rows."""
        rows = [tuple(int(v) for v in row) for row in rows]
        if cols is None:
            if not rows:
                raise ValueError("cols must be given for a matrix without rows")
            cols = len(rows[0])
        for row in rows:
            if len(row) != cols:
                raise DimensionMismatchError(f"row {row} does not have {cols} entries")
        return cls(len(rows), cols, tuple(v for row in rows for v in row))

    @classmethod
    def identity(cls, n: int) -> "IntMatrix":
        """The n x n identity."""
        return cls(n, n, tuple(int(i == j) for i in range(n) for j in range(n)))

    @classmethod
    def zeros(cls, rows: int, cols: int) -> "IntMatrix":
        """The all-zero matrix."""
        return cls(rows, cols, (0,) * (rows * cols))

    def __getitem__(self, index: tuple[int, int]) -> int:
        i, j = index
        return self.entries[i * self.cols + j]

    def row(self, i: int) -> Vector:
        """Row ``i`` as a tuple."""
        return self.entries[i * self.cols:(i + 1) * self.cols]

    def to_rows(self) -> list[list[int]]:
        """Mutable copy as a list of rows."""
        return [list(self.row(i)) for i in range(self.rows)]

    def transpose(self) -> "IntMatrix":
        """Transposed matrix."""
        return IntMatrix(
            self.cols,
            self.rows,
            tuple(self[i, j] for j in range(self.cols) for i in range(self.rows)),
        )

    def __matmul__(self, other: "IntMatrix") -> "IntMatrix":
        if self.cols != other.rows:
            raise DimensionMismatchError(
                f"cannot multiply {self.rows}x{self.cols} by {other.rows}x{other.cols}"
            )
        columns = [other.transpose().row(j) for j in range(other.cols)]
        return IntMatrix(
            self.rows,
            other.cols,
            tuple(
                sum(a * b for a, b in zip(self.row(i), column))
                for i in range(self.rows)
                for column in columns
            ),
        )


@dataclass(frozen=True)
class SnfResult:
    """Smith normal form ``left @ m @ right == diag(diagonal)``."""

    diagonal: tuple[int, ...]
    rank: int
    left: IntMatrix
    right: IntMatrix

    def diagonal_matrix(self, rows: int, cols: int) -> IntMatrix:
        """The diagonal form as a full ``rows x cols`` matrix."""
        return IntMatrix(
            rows,
            cols,
            tuple(
                self.diagonal[i] if i == j else 0
                for i in range(rows)
                for j in range(cols)
            ),
        )


def xgcd(a: int, b: int) -> tuple[int, int, int]:
    """Return ``(x, y, g)`` with ``x*a + y*b == g == gcd(a, b) >= 0``."""
    x, next_x = 1, 0
    y, next_y = 0, 1
    g, next_g = a, b
    while next_g:
        q = g // next_g
        x, next_x = next_x, x - q * next_x
        y, next_y = next_y, y - q * next_y
        g, next_g = next_g, g - q * next_g
    if g < 0:
        x, y, g = -x, -y, -g
    return x, y, g


def _column_hnf(a: list[list[int]], ncols: int) -> tuple[list[list[int]], list[list[int]], list[int]]:
    """Column-style HNF of ``a`` in place. Returns ``(h, u, pivot_rows)``."""
    nrows = len(a)
    h = [list(row) for row in a]
    u = [[int(i == j) for j in range(ncols)] for i in range(ncols)]

    def combine(j1: int, j2: int, x: int, y: int, z: int, w: int) -> None:
        # (col j1, col j2) <- (x*c1 + y*c2, z*c1 + w*c2)
        for mat in (h, u):
            for row in mat:
                c1, c2 = row[j1], row[j2]
                row[j1] = x * c1 + y * c2
                row[j2] = z * c1 + w * c2

    def add_multiple(target: int, source: int, q: int) -> None:
        for mat in (h, u):
            for row in mat:
                row[target] -= q * row[source]

    pivots: list[int] = []
    k = 0
    for i in range(nrows):
        if k == ncols:
            break
        for j in range(k + 1, ncols):
            b = h[i][j]
            if b == 0:
                continue
            a_ = h[i][k]
            x, y, g = xgcd(a_, b)
            combine(k, j, x, y, -b // g, a_ // g)
        if h[i][k] == 0:
            continue
        if h[i][k] < 0:
            for mat in (h, u):
                for row in mat:
                    row[k] = -row[k]
        pivot = h[i][k]
        for j in range(k):
            q = h[i][j] // pivot
            if q:
                add_multiple(j, k, q)
        pivots.append(i)
        k += 1
    return h, u, pivots


def hermite_normal_form(m: IntMatrix) -> tuple[IntMatrix, IntMatrix]:
    """Column-style Hermite normal form.

    Returns:
        ``(h, u)`` with ``u`` unimodular and ``m @ u == h``
    """
    h, u, _ = _column_hnf(m.to_rows(), m.cols)
    return (
        IntMatrix(m.rows, m.cols, tuple(v for row in h for v in row)),
        IntMatrix(m.cols, m.cols, tuple(v for row in u for v in row)),
    )


def smith_normal_form(m: IntMatrix) -> SnfResult:
    """Smith normal form by iterated gcd elimination."""
    nrows, ncols = m.rows, m.cols
    a = m.to_rows()
    left = [[int(i == j) for j in range(nrows)] for i in range(nrows)]
    right = [[int(i == j) for j in range(ncols)] for i in range(ncols)]

    def row_combine(i1: int, i2: int, x: int, y: int, z: int, w: int) -> None:
        for mat in (a, left):
            r1, r2 = mat[i1], mat[i2]
            mat[i1] = [x * p + y * q for p, q in zip(r1, r2)]
            mat[i2] = [z * p + w * q for p, q in zip(r1, r2)]

    def col_combine(j1: int, j2: int, x: int, y: int, z: int, w: int) -> None:
        for mat in (a, right):
            for row in mat:
                c1, c2 = row[j1], row[j2]
                row[j1] = x * c1 + y * c2
                row[j2] = z * c1 + w * c2

    def swap_rows(i1: int, i2: int) -> None:
        if i1 != i2:
            for mat in (a, left):
                mat[i1], mat[i2] = mat[i2], mat[i1]

    def swap_cols(j1: int, j2: int) -> None:
        if j1 != j2:
            col_combine(j1, j2, 0, 1, 1, 0)

    for t in range(min(nrows, ncols)):
        candidates = [
            (abs(a[i][j]), i, j)
            for i in range(t, nrows)
            for j in range(t, ncols)
            if a[i][j]
        ]
        if not candidates:
            break
        _, i0, j0 = min(candidates)
        swap_rows(t, i0)
        swap_cols(t, j0)

        while True:
            for i in range(t + 1, nrows):
                b = a[i][t]
                if b == 0:
                    continue
                p = a[t][t]
                if b % p == 0:
                    row_combine(t, i, 1, 0, -(b // p), 1)
                else:
                    x, y, g = xgcd(p, b)
                    row_combine(t, i, x, y, -b // g, p // g)
            for j in range(t + 1, ncols):
                b = a[t][j]
                if b == 0:
                    continue
                p = a[t][t]
                if b % p == 0:
                    col_combine(t, j, 1, 0, -(b // p), 1)
                else:
                    x, y, g = xgcd(p, b)
                    col_combine(t, j, x, y, -b // g, p // g)
            if any(a[i][t] for i in range(t + 1, nrows)):
                continue
            p = a[t][t]
            offender = next(
                (i for i in range(t + 1, nrows) for j in range(t + 1, ncols) if a[i][j] % p),
                None,
            )
            if offender is None:
                break
            row_combine(t, offender, 1, 1, 0, 1)

        if a[t][t] < 0:
            for mat in (a, left):
                mat[t] = [-v for v in mat[t]]

    size = min(nrows, ncols)
    diagonal = tuple(a[i][i] for i in range(size))
    return SnfResult(
        diagonal=diagonal,
        rank=sum(1 for d in diagonal if d),
        left=IntMatrix(nrows, nrows, tuple(v for row in left for v in row)),
        right=IntMatrix(ncols, ncols, tuple(v for row in right for v in row)),
    )


def saturation_index(generators: IntMatrix) -> int:
    """Index of the generated lattice inside its saturation (rational span ∩ ℤⁿ)."""
    snf = smith_normal_form(generators)
    return prod(d for d in snf.diagonal if d)


def sublattice_index(generators: IntMatrix, ambient_rank: int) -> int | Literal["infinite"]:
    """Index of the lattice generated by the rows in ℤ^ambient_rank."""
    if generators.cols != ambient_rank:
        raise DimensionMismatchError(
            f"generators have {generators.cols} columns, ambient rank is {ambient_rank}"
        )
    if generators.rows == 0:
        return 1 if ambient_rank == 0 else INFINITE
    snf = smith_normal_form(generators)
    if snf.rank < ambient_rank:
        return INFINITE
    return prod(snf.diagonal)


def lattice_basis(generators: IntMatrix) -> IntMatrix:
    """A ℤ-basis (as rows) of the lattice generated by the rows."""
    if generators.rows == 0:
        return IntMatrix.zeros(0, generators.cols)
    h, _, pivots = _column_hnf(generators.transpose().to_rows(), generators.rows)
    rank = len(pivots)
    basis = [tuple(h[i][k] for i in range(generators.cols)) for k in range(rank)]
    return IntMatrix.from_rows(basis, cols=generators.cols) if basis else IntMatrix.zeros(0, generators.cols)


def integer_kernel(m: IntMatrix) -> IntMatrix:
    """A ℤ-basis (as rows) of ``{x : m @ x == 0}``."""
    h, u, pivots = _column_hnf(m.to_rows(), m.cols)
    rank = len(pivots)
    return IntMatrix.from_rows(
        [tuple(u[i][k] for i in range(m.cols)) for k in range(rank, m.cols)],
        cols=m.cols,
    )


def try_coordinates_in_basis(basis: IntMatrix, point: Vector) -> Vector | None:
    """Like :func:`coordinates_in_basis` but returns ``None`` off the lattice."""
    if len(point) != basis.cols:
        raise DimensionMismatchError(
            f"point has {len(point)} coordinates, basis vectors have {basis.cols}"
        )
    r = basis.rows
    if r == 0:
        return () if not any(point) else None
    h, u, pivots = _column_hnf(basis.transpose().to_rows(), r)
    if len(pivots) != r:
        raise ValueError("basis rows are linearly dependent")

    z: list[int] = []
    for k, i in enumerate(pivots):
        residual = point[i] - sum(h[i][l] * z[l] for l in range(k))
        q, rem = divmod(residual, h[i][k])
        if rem:
            return None
        z.append(q)
    for i in range(basis.cols):
        if sum(h[i][l] * z[l] for l in range(r)) != point[i]:
            return None
    return tuple(sum(u[j][l] * z[l] for l in range(r)) for j in range(r))


def coordinates_in_basis(basis: IntMatrix, point: Vector) -> Vector:
    """Integer ``x`` with ``sum(x[i] * basis.row(i)) == point``.

    Raises:
        NotInLatticeError: if no integer solution exists
    """
    coords = try_coordinates_in_basis(basis, point)
    if coords is None:
        raise NotInLatticeError(f"{point} is not in the lattice spanned by the basis")
    return coords
