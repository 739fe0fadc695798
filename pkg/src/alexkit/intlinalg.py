"""Exact integer matrices: Smith normal form, rank, cokernels."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence


@dataclass(frozen=True)
class IntMatrix:
    """Row-major integer matrix. Immutable; entries are Python ints."""

    rows: int
    cols: int
    entries: tuple

    def __post_init__(self):
        ent = tuple(int(x) for x in self.entries)
        if self.rows < 0 or self.cols < 0 or len(ent) != self.rows * self.cols:
            raise ValueError(
                f"{self.rows}x{self.cols} matrix needs {self.rows * self.cols} entries, "
                f"got {len(ent)}"
            )
        object.__setattr__(self, "entries", ent)

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[int]], cols: int | None = None) -> "IntMatrix":
        rows = [list(r) for r in rows]
        if cols is None:
            cols = len(rows[0]) if rows else 0
        if any(len(r) != cols for r in rows):
            raise ValueError("ragged rows")
        return cls(len(rows), cols, tuple(x for r in rows for x in r))

    @classmethod
    def zeros(cls, rows: int, cols: int | None = None) -> "IntMatrix":
        cols = rows if cols is None else cols
        return cls(rows, cols, (0,) * (rows * cols))

    @classmethod
    def identity(cls, n: int) -> "IntMatrix":
        return cls(n, n, tuple(int(i == j) for i in range(n) for j in range(n)))

    @classmethod
    def diagonal(cls, diag: Sequence[int], rows: int | None = None, cols: int | None = None):
        rows = len(diag) if rows is None else rows
        cols = rows if cols is None else cols
        ent = [0] * (rows * cols)
        for i, d in enumerate(diag):
            ent[i * cols + i] = d
        return cls(rows, cols, tuple(ent))

    def __getitem__(self, ij):
        i, j = ij
        return self.entries[i * self.cols + j]

    def to_rows(self) -> list:
        return [list(self.entries[i * self.cols:(i + 1) * self.cols]) for i in range(self.rows)]

    def row(self, i):
        return self.entries[i * self.cols:(i + 1) * self.cols]

    @property
    def shape(self):
        return self.rows, self.cols

    @property
    def T(self) -> "IntMatrix":
        return IntMatrix(
            self.cols, self.rows,
            tuple(self[i, j] for j in range(self.cols) for i in range(self.rows)),
        )

    def is_square(self) -> bool:
        return self.rows == self.cols

    def is_zero(self) -> bool:
        return not any(self.entries)

    def is_symmetric(self) -> bool:
        return self.is_square() and self == self.T

    def __add__(self, other: "IntMatrix") -> "IntMatrix":
        if self.shape != other.shape:
            raise ValueError("shape mismatch")
        return IntMatrix(self.rows, self.cols, tuple(a + b for a, b in zip(self.entries, other.entries)))

    def __sub__(self, other: "IntMatrix") -> "IntMatrix":
        if self.shape != other.shape:
            raise ValueError("shape mismatch")
        return IntMatrix(self.rows, self.cols, tuple(a - b for a, b in zip(self.entries, other.entries)))

    def __neg__(self):
        return IntMatrix(self.rows, self.cols, tuple(-a for a in self.entries))

    def __matmul__(self, other: "IntMatrix") -> "IntMatrix":
        if self.cols != other.rows:
            raise ValueError("shape mismatch")
        out = []
        for i in range(self.rows):
            r = self.row(i)
            for j in range(other.cols):
                out.append(sum(r[k] * other[k, j] for k in range(self.cols)))
        return IntMatrix(self.rows, other.cols, tuple(out))

    def det(self) -> int:
        """Bareiss fraction-free determinant."""
        if not self.is_square():
            raise ValueError("determinant of a non-square matrix")
        n = self.rows
        a = self.to_rows()
        sign, prev = 1, 1
        for k in range(n - 1):
            if a[k][k] == 0:
                for r in range(k + 1, n):
                    if a[r][k]:
                        a[k], a[r] = a[r], a[k]
                        sign = -sign
                        break
                else:
                    return 0
            for i in range(k + 1, n):
                for j in range(k + 1, n):
                    a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
            prev = a[k][k]
        return sign * a[n - 1][n - 1] if n else 1

    def __str__(self):
        return str(self.to_rows())


def as_matrix(m) -> IntMatrix:
    return m if isinstance(m, IntMatrix) else IntMatrix.from_rows(m)


def block(blocks) -> IntMatrix:
    """Assemble a matrix from a grid of IntMatrix blocks."""
    blocks = [[as_matrix(b) for b in row] for row in blocks]
    rows = []
    for brow in blocks:
        h = brow[0].rows
        if any(b.rows != h for b in brow):
            raise ValueError("block heights differ within a block row")
        for i in range(h):
            rows.append([x for b in brow for x in b.row(i)])
    cols = sum(b.cols for b in blocks[0]) if blocks else 0
    return IntMatrix.from_rows(rows, cols)


@dataclass(frozen=True)
class SmithDecomposition:
    """``left @ A @ right == diag(diagonal)`` padded to the shape of ``A``.

    ``diagonal`` has ``min(rows, cols)`` nonnegative entries with
    ``d[i] | d[i+1]``; zeros come last.
    """

    left: IntMatrix
    right: IntMatrix
    diagonal: tuple

    def diagonal_matrix(self) -> IntMatrix:
        return IntMatrix.diagonal(self.diagonal, self.left.rows, self.right.cols)


def smith_normal_form(A) -> SmithDecomposition:
    """Smith normal form with unimodular transforms.

    Pivots on the smallest nonzero absolute value in the remaining
    submatrix, which keeps entries small for hand-sized inputs.
    """
    A = as_matrix(A)
    m, n = A.shape
    a = A.to_rows()
    L = IntMatrix.identity(m).to_rows()
    R = IntMatrix.identity(n).to_rows()

    def swap_rows(i, j):
        a[i], a[j] = a[j], a[i]
        L[i], L[j] = L[j], L[i]

    def swap_cols(i, j):
        for row in a:
            row[i], row[j] = row[j], row[i]
        for row in R:
            row[i], row[j] = row[j], row[i]

    def add_row(dst, src, c):  # row dst += c * row src
        a[dst] = [x + c * y for x, y in zip(a[dst], a[src])]
        L[dst] = [x + c * y for x, y in zip(L[dst], L[src])]

    def add_col(dst, src, c):  # col dst += c * col src
        for row in a:
            row[dst] += c * row[src]
        for row in R:
            row[dst] += c * row[src]

    for s in range(min(m, n)):
        while True:
            best = None
            for i in range(s, m):
                for j in range(s, n):
                    v = abs(a[i][j])
                    if v and (best is None or v < best[0]):
                        best = (v, i, j)
            if best is None:
                break
            _, i, j = best
            swap_rows(s, i)
            swap_cols(s, j)
            p = a[s][s]
            dirty = False
            for i in range(s + 1, m):
                if a[i][s]:
                    add_row(i, s, -(a[i][s] // p))
                    dirty = dirty or a[i][s] != 0
            for j in range(s + 1, n):
                if a[s][j]:
                    add_col(j, s, -(a[s][j] // p))
                    dirty = dirty or a[s][j] != 0
            if dirty:
                continue
            # row and column clear; enforce divisibility on the rest
            bad = next(
                (i for i in range(s + 1, m) for j in range(s + 1, n) if a[i][j] % p),
                None,
            )
            if bad is None:
                break
            add_row(s, bad, 1)
        if a[s][s] < 0:
            a[s] = [-x for x in a[s]]
            L[s] = [-x for x in L[s]]
        if best is None:
            break
    diag = tuple(a[i][i] for i in range(min(m, n)))
    return SmithDecomposition(IntMatrix.from_rows(L, m), IntMatrix.from_rows(R, n), diag)


def rank(A) -> int:
    return sum(1 for d in smith_normal_form(A).diagonal if d)


def cokernel_invariants(A) -> tuple[int, list]:
    """``Z^n / A Z^n`` as ``(free_rank, torsion)`` with ``torsion`` entries > 1."""
    A = as_matrix(A)
    if not A.is_square():
        raise ValueError("cokernel_invariants expects a square matrix")
    diag = smith_normal_form(A).diagonal
    free = A.rows - sum(1 for d in diag if d)
    return free, [d for d in diag if d > 1]
