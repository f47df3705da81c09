"""Exact rational scalars and dense rational matrices.

Scalars are ``fractions.Fraction`` (always lowest terms, positive
denominator, exact arithmetic).  Matrices are immutable, dense, row-major,
and support the rank/kernel computations every homology calculation in
this package reduces to.  Zero-by-n and n-by-zero matrices are first-class
values: they represent zero maps in and out of the zero space.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Sequence, Union

from .errors import ShapeError

Rational = Fraction

Scalar = Union[Fraction, int, str]


def rat(value: Scalar) -> Fraction:
    """Coerce an int, string like ``"3/4"``, or Fraction to a Fraction."""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool):
        raise ShapeError("booleans are not rational scalars")
    if isinstance(value, (int, str)):
        return Fraction(value)
    raise ShapeError(f"cannot interpret {value!r} as an exact rational")


class RationalMatrix:
    """Immutable dense matrix of exact rationals."""

    __slots__ = ("rows", "cols", "_entries")

    def __init__(self, rows: int, cols: int, entries: Iterable[Scalar]):
        if rows < 0 or cols < 0:
            raise ShapeError("matrix dimensions must be nonnegative")
        data = tuple(rat(x) for x in entries)
        if len(data) != rows * cols:
            raise ShapeError(
                f"{rows}x{cols} matrix needs {rows * cols} entries, got {len(data)}"
            )
        self.rows = rows
        self.cols = cols
        self._entries = data

    @classmethod
    def zero(cls, rows: int, cols: int) -> "RationalMatrix":
        return cls(rows, cols, [0] * (rows * cols))

    @classmethod
    def identity(cls, n: int) -> "RationalMatrix":
        return cls(n, n, [1 if i == j else 0 for i in range(n) for j in range(n)])

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[Scalar]]) -> "RationalMatrix":
        nrows = len(rows)
        ncols = len(rows[0]) if nrows else 0
        flat: list[Scalar] = []
        for r in rows:
            if len(r) != ncols:
                raise ShapeError("ragged rows")
            flat.extend(r)
        return cls(nrows, ncols, flat)

    def __getitem__(self, ij: tuple[int, int]) -> Fraction:
        i, j = ij
        if not (0 <= i < self.rows and 0 <= j < self.cols):
            raise ShapeError(f"index ({i},{j}) out of range for {self.rows}x{self.cols}")
        return self._entries[i * self.cols + j]

    def row(self, i: int) -> tuple[Fraction, ...]:
        return self._entries[i * self.cols : (i + 1) * self.cols]

    def entries(self) -> tuple[Fraction, ...]:
        """Row-major tuple of all entries."""
        return self._entries

    def to_lists(self) -> list[list[Fraction]]:
        return [list(self.row(i)) for i in range(self.rows)]

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, RationalMatrix):
            return NotImplemented
        return (
            self.rows == other.rows
            and self.cols == other.cols
            and self._entries == other._entries
        )

    def __hash__(self) -> int:
        return hash((self.rows, self.cols, self._entries))

    def __repr__(self) -> str:
        if self.rows == 0 or self.cols == 0:
            return f"RationalMatrix({self.rows}x{self.cols})"
        body = "; ".join(
            " ".join(str(x) for x in self.row(i)) for i in range(self.rows)
        )
        return f"RationalMatrix({self.rows}x{self.cols}: {body})"

    def is_zero(self) -> bool:
        return all(x == 0 for x in self._entries)

    def __neg__(self) -> "RationalMatrix":
        return RationalMatrix(self.rows, self.cols, [-x for x in self._entries])

    def __add__(self, other: "RationalMatrix") -> "RationalMatrix":
        if self.rows != other.rows or self.cols != other.cols:
            raise ShapeError(
                f"cannot add {self.rows}x{self.cols} and {other.rows}x{other.cols}"
            )
        return RationalMatrix(
            self.rows, self.cols, [a + b for a, b in zip(self._entries, other._entries)]
        )

    def __sub__(self, other: "RationalMatrix") -> "RationalMatrix":
        return self + (-other)

    def scale(self, c: Scalar) -> "RationalMatrix":
        f = rat(c)
        return RationalMatrix(self.rows, self.cols, [f * x for x in self._entries])

    def __rmul__(self, c: Scalar) -> "RationalMatrix":
        return self.scale(c)

    def __matmul__(self, other: "RationalMatrix") -> "RationalMatrix":
        if self.cols != other.rows:
            raise ShapeError(
                f"cannot multiply {self.rows}x{self.cols} by {other.rows}x{other.cols}"
            )
        out: list[Fraction] = []
        for i in range(self.rows):
            ri = self.row(i)
            for j in range(other.cols):
                acc = Fraction(0)
                for k in range(self.cols):
                    acc += ri[k] * other._entries[k * other.cols + j]
                out.append(acc)
        return RationalMatrix(self.rows, other.cols, out)

    def transpose(self) -> "RationalMatrix":
        return RationalMatrix(
            self.cols,
            self.rows,
            [self._entries[i * self.cols + j] for j in range(self.cols) for i in range(self.rows)],
        )

    def _rref(self) -> tuple[list[list[Fraction]], list[int]]:
        """Reduced row echelon form and pivot columns.

        Gaussian elimination with first-nonzero pivoting: for each column,
        the first row (at or below the current one) with a nonzero entry is
        promoted.  Exact throughout.
        """
        m = [list(self.row(i)) for i in range(self.rows)]
        pivots: list[int] = []
        r = 0
        for c in range(self.cols):
            if r >= self.rows:
                break
            pivot_row = next((i for i in range(r, self.rows) if m[i][c] != 0), None)
            if pivot_row is None:
                continue
            m[r], m[pivot_row] = m[pivot_row], m[r]
            inv = 1 / m[r][c]
            m[r] = [inv * x for x in m[r]]
            for i in range(self.rows):
                if i != r and m[i][c] != 0:
                    f = m[i][c]
                    m[i] = [x - f * y for x, y in zip(m[i], m[r])]
            pivots.append(c)
            r += 1
        return m, pivots

    def rank(self) -> int:
        """Dimension of the column space."""
        return len(self._rref()[1])

    def kernel_basis(self) -> "RationalMatrix":
        """Matrix whose columns form a basis of the null space.

        Column count is ``cols - rank``; ``self @ basis`` is zero.  Free
        columns are taken in ascending order, so the result is canonical.
        """
        m, pivots = self._rref()
        pivot_set = set(pivots)
        free = [c for c in range(self.cols) if c not in pivot_set]
        columns: list[list[Fraction]] = []
        for fc in free:
            v = [Fraction(0)] * self.cols
            v[fc] = Fraction(1)
            for r, pc in enumerate(pivots):
                v[pc] = -m[r][fc]
            columns.append(v)
        flat = [columns[j][i] for i in range(self.cols) for j in range(len(free))]
        return RationalMatrix(self.cols, len(free), flat)

    def is_invertible(self) -> bool:
        """True iff square and full rank; the 0x0 matrix is invertible."""
        return self.rows == self.cols and self.rank() == self.rows


def block_diag(a: RationalMatrix, b: RationalMatrix) -> RationalMatrix:
    """Block-diagonal assembly; degenerate (zero-dimension) blocks collapse."""
    rows = a.rows + b.rows
    cols = a.cols + b.cols
    out: list[Fraction] = []
    for i in range(rows):
        for j in range(cols):
            if i < a.rows and j < a.cols:
                out.append(a[i, j])
            elif i >= a.rows and j >= a.cols:
                out.append(b[i - a.rows, j - a.cols])
            else:
                out.append(Fraction(0))
    return RationalMatrix(rows, cols, out)
