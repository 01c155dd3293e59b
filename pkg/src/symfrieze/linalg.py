"""Small dense matrices over a ScalarKind.

Sizes in this package stay tiny (2x2 through roughly 10x10), so the point is
exactness, not speed. Determinants dispatch on the kind: fraction-free
Bareiss elimination for exact kinds (works over any integral domain whose
elements support * and exact /), partial-pivot LU for the float kind.
"""

from __future__ import annotations

from typing import Any, Iterable, Sequence

from .scalars import KindMismatch, ScalarKind


class SingularMatrix(ValueError):
    """Linear solve hit a zero determinant."""


class Matrix:
    __slots__ = ("kind", "rows")

    def __init__(self, kind: ScalarKind, rows: Iterable[Iterable[Any]]):
        self.kind = kind
        self.rows = tuple(tuple(kind.coerce(v) for v in row) for row in rows)
        if self.rows:
            width = len(self.rows[0])
            if any(len(r) != width for r in self.rows):
                raise ValueError("ragged matrix rows")

    @classmethod
    def identity(cls, kind: ScalarKind, n: int) -> "Matrix":
        one, zero = kind.one(), kind.zero()
        return cls(kind, [[one if i == j else zero for j in range(n)] for i in range(n)])

    @property
    def nrows(self) -> int:
        return len(self.rows)

    @property
    def ncols(self) -> int:
        return len(self.rows[0]) if self.rows else 0

    def __getitem__(self, ij: tuple[int, int]) -> Any:
        i, j = ij
        return self.rows[i][j]

    def transpose(self) -> "Matrix":
        return Matrix(self.kind, zip(*self.rows))

    def scaled(self, c: Any) -> "Matrix":
        c = self.kind.coerce(c)
        return Matrix(self.kind, [[c * v for v in row] for row in self.rows])

    def __neg__(self) -> "Matrix":
        return Matrix(self.kind, [[-v for v in row] for row in self.rows])

    def __add__(self, other: "Matrix") -> "Matrix":
        self._check_kind(other)
        return Matrix(
            self.kind,
            [[a + b for a, b in zip(ra, rb)] for ra, rb in zip(self.rows, other.rows)],
        )

    def __sub__(self, other: "Matrix") -> "Matrix":
        self._check_kind(other)
        return Matrix(
            self.kind,
            [[a - b for a, b in zip(ra, rb)] for ra, rb in zip(self.rows, other.rows)],
        )

    def __mul__(self, other: "Matrix") -> "Matrix":
        return mat_mul(self, other)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Matrix):
            return NotImplemented
        if self.nrows != other.nrows or self.ncols != other.ncols:
            return False
        eq = self.kind.eq
        return all(
            eq(a, b) for ra, rb in zip(self.rows, other.rows) for a, b in zip(ra, rb)
        )

    def __hash__(self):
        raise TypeError("Matrix is not hashable")

    def submatrix(self, row_idx: Sequence[int], col_idx: Sequence[int]) -> "Matrix":
        return Matrix(
            self.kind, [[self.rows[i][j] for j in col_idx] for i in row_idx]
        )

    def det(self) -> Any:
        return det(self)

    def _check_kind(self, other: "Matrix") -> None:
        if self.kind is not other.kind:
            raise KindMismatch(
                f"mixing matrices over {self.kind.name} and {other.kind.name}"
            )

    def __repr__(self) -> str:
        body = "; ".join(" ".join(str(v) for v in row) for row in self.rows)
        return f"Matrix({self.kind.name}, [{body}])"


def mat_mul(a: Matrix, b: Matrix) -> Matrix:
    a._check_kind(b)
    if a.ncols != b.nrows:
        raise ValueError(f"shape mismatch {a.nrows}x{a.ncols} @ {b.nrows}x{b.ncols}")
    bt = list(zip(*b.rows))
    out = []
    for row in a.rows:
        out.append(
            [_dot(a.kind, row, col) for col in bt]
        )
    return Matrix(a.kind, out)


def _dot(kind: ScalarKind, u: Sequence[Any], v: Sequence[Any]) -> Any:
    acc = kind.zero()
    for x, y in zip(u, v):
        acc = acc + x * y
    return acc


def det(m: Matrix) -> Any:
    if m.nrows != m.ncols:
        raise ValueError("determinant of a non-square matrix")
    if m.nrows == 0:
        return m.kind.one()
    if m.kind.exact:
        return _det_bareiss(m)
    return _det_lu(m)


def _det_bareiss(m: Matrix) -> Any:
    # fraction-free elimination; every division is exact in the domain
    kind = m.kind
    n = m.nrows
    a = [list(row) for row in m.rows]
    sign = 1
    prev = kind.one()
    for k in range(n - 1):
        if kind.is_zero(a[k][k]):
            for r in range(k + 1, n):
                if not kind.is_zero(a[r][k]):
                    a[k], a[r] = a[r], a[k]
                    sign = -sign
                    break
            else:
                return kind.zero()
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev
            a[i][k] = kind.zero()
        prev = a[k][k]
    result = a[n - 1][n - 1]
    return result if sign == 1 else -result


def _det_lu(m: Matrix) -> Any:
    kind = m.kind
    n = m.nrows
    a = [list(row) for row in m.rows]
    acc = kind.one()
    for k in range(n):
        p = max(range(k, n), key=lambda r: abs(a[r][k]))
        if a[p][k] == 0:
            return kind.zero()
        if p != k:
            a[k], a[p] = a[p], a[k]
            acc = -acc
        acc = acc * a[k][k]
        for i in range(k + 1, n):
            f = a[i][k] / a[k][k]
            for j in range(k + 1, n):
                a[i][j] -= f * a[k][j]
    return acc


def minor(m: Matrix, row_idx: Sequence[int], col_idx: Sequence[int]) -> Any:
    """Determinant of the submatrix picked out by the given index lists."""
    return det(m.submatrix(row_idx, col_idx))


def solve_linear(a: Matrix, b: Sequence[Any]) -> tuple[Any, ...]:
    """Solve a @ x = b by Cramer's rule. Raises SingularMatrix on det = 0."""
    if a.nrows != a.ncols:
        raise ValueError("solve_linear needs a square matrix")
    if len(b) != a.nrows:
        raise ValueError("right-hand side length mismatch")
    kind = a.kind
    b = [kind.coerce(v) for v in b]
    d = det(a)
    if kind.is_zero(d):
        raise SingularMatrix("coefficient matrix is singular")
    out = []
    for j in range(a.ncols):
        cols = [
            [b[i] if c == j else a.rows[i][c] for c in range(a.ncols)]
            for i in range(a.nrows)
        ]
        out.append(det(Matrix(kind, cols)) / d)
    return tuple(out)
