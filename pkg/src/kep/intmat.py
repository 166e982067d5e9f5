"""Exact dense integer matrices: Smith/Hermite normal forms, determinants,
integer kernels and support-digraph predicates.

All arithmetic is over Python ints, so nothing here can overflow.  Matrices
are immutable; every operation returns fresh values.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import InputValidationError


class IntMatrix:
    """Immutable rows x cols matrix of arbitrary-precision integers.

    >>> m = IntMatrix([[1, 2], [3, 4]])
    >>> m[0, 1]
    2
    >>> (m @ IntMatrix.identity(2)) == m
    True
    """

    __slots__ = ("rows", "cols", "_data")

    def __init__(self, data: Iterable[Sequence[int]]):
        rows = tuple(tuple(row) for row in data)
        if not rows or not rows[0]:
            raise ValueError("matrix must have at least one row and one column")
        width = len(rows[0])
        for row in rows:
            if len(row) != width:
                raise ValueError("ragged rows")
            for x in row:
                if not isinstance(x, int):
                    raise TypeError(f"matrix entries must be int, got {type(x).__name__}")
        self.rows = len(rows)
        self.cols = width
        self._data = rows

    @classmethod
    def identity(cls, n: int) -> "IntMatrix":
        return cls([[1 if i == j else 0 for j in range(n)] for i in range(n)])

    @classmethod
    def zeros(cls, rows: int, cols: int) -> "IntMatrix":
        return cls([[0] * cols for _ in range(rows)])

    @classmethod
    def from_columns(cls, columns: Sequence[Sequence[int]]) -> "IntMatrix":
        if not columns:
            raise ValueError("need at least one column")
        n = len(columns[0])
        return cls([[col[i] for col in columns] for i in range(n)])

    def __getitem__(self, key: tuple[int, int]) -> int:
        i, j = key
        return self._data[i][j]

    def __iter__(self):
        return iter(self._data)

    def row(self, i: int) -> tuple[int, ...]:
        return self._data[i]

    def column(self, j: int) -> tuple[int, ...]:
        return tuple(row[j] for row in self._data)

    @property
    def entries(self) -> tuple[int, ...]:
        """Row-major flat view of the entries."""
        return tuple(x for row in self._data for x in row)

    @property
    def is_square(self) -> bool:
        return self.rows == self.cols

    def transpose(self) -> "IntMatrix":
        return IntMatrix([self.column(j) for j in range(self.cols)])

    def apply(self, vector: Sequence[int]) -> tuple[int, ...]:
        """Matrix-vector product M @ v."""
        if len(vector) != self.cols:
            raise ValueError("vector length does not match column count")
        return tuple(sum(row[j] * vector[j] for j in range(self.cols)) for row in self._data)

    def __add__(self, other: "IntMatrix") -> "IntMatrix":
        self._require_same_shape(other)
        return IntMatrix(
            [[a + b for a, b in zip(ra, rb)] for ra, rb in zip(self._data, other._data)]
        )

    def __sub__(self, other: "IntMatrix") -> "IntMatrix":
        self._require_same_shape(other)
        return IntMatrix(
            [[a - b for a, b in zip(ra, rb)] for ra, rb in zip(self._data, other._data)]
        )

    def __neg__(self) -> "IntMatrix":
        return IntMatrix([[-a for a in row] for row in self._data])

    def __matmul__(self, other: "IntMatrix") -> "IntMatrix":
        if self.cols != other.rows:
            raise ValueError("inner dimensions do not match")
        cols = [other.column(j) for j in range(other.cols)]
        return IntMatrix(
            [[sum(a * b for a, b in zip(row, col)) for col in cols] for row in self._data]
        )

    def __mul__(self, scalar: int) -> "IntMatrix":
        if not isinstance(scalar, int):
            return NotImplemented
        return IntMatrix([[scalar * a for a in row] for row in self._data])

    __rmul__ = __mul__

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, IntMatrix):
            return NotImplemented
        return self._data == other._data

    def __hash__(self) -> int:
        return hash(self._data)

    def __repr__(self) -> str:
        return f"IntMatrix({[list(row) for row in self._data]})"

    def __str__(self) -> str:
        body = [[str(x) for x in row] for row in self._data]
        widths = [max(len(body[i][j]) for i in range(self.rows)) for j in range(self.cols)]
        return "\n".join(
            "[" + "  ".join(cell.rjust(w) for cell, w in zip(row, widths)) + "]" for row in body
        )

    def to_lists(self) -> list[list[int]]:
        return [list(row) for row in self._data]

    def _require_same_shape(self, other: "IntMatrix") -> None:
        if (self.rows, self.cols) != (other.rows, other.cols):
            raise ValueError("shape mismatch")


def hstack(left: IntMatrix, right: IntMatrix) -> IntMatrix:
    """Concatenate two matrices with equal row counts side by side."""
    if left.rows != right.rows:
        raise ValueError("row counts differ")
    return IntMatrix([lrow + rrow for lrow, rrow in zip(left, right)])


@dataclass(frozen=True)
class SnfDecomposition:
    """Smith normal form U @ M @ V == D of a matrix M.

    U (rows x rows) and V (cols x cols) are unimodular; D is diagonal with
    nonnegative entries d_1 | d_2 | ... (trailing zeros allowed, unit
    factors retained).  D is unique given M.
    """

    U: IntMatrix
    D: IntMatrix
    V: IntMatrix

    def diagonal(self) -> tuple[int, ...]:
        k = min(self.D.rows, self.D.cols)
        return tuple(self.D[i, i] for i in range(k))

    def rank(self) -> int:
        return sum(1 for d in self.diagonal() if d != 0)


def _xgcd(a: int, b: int) -> tuple[int, int, int]:
    """Return (g, x, y) with g = gcd(a, b) >= 0 and a*x + b*y = g."""
    old_r, r = a, b
    old_x, x = 1, 0
    old_y, y = 0, 1
    while r:
        q = old_r // r
        old_r, r = r, old_r - q * r
        old_x, x = x, old_x - q * x
        old_y, y = y, old_y - q * y
    if old_r < 0:
        return -old_r, -old_x, -old_y
    return old_r, old_x, old_y


def snf(m: IntMatrix) -> SnfDecomposition:
    """Smith normal form with unimodular transformation witnesses.

    Pivoting always selects the nonzero entry of smallest absolute value in
    the remaining submatrix and reduces its row and column by it; this keeps
    intermediate entries from blowing up.  Before a pivot is finalized it is
    made to divide every entry of the remaining submatrix, so the diagonal
    comes out as a divisor chain without a separate fix-up pass.
    """
    rows, cols = m.rows, m.cols
    a = m.to_lists()
    u = IntMatrix.identity(rows).to_lists()
    v = IntMatrix.identity(cols).to_lists()

    def swap_rows(i: int, k: int) -> None:
        a[i], a[k] = a[k], a[i]
        u[i], u[k] = u[k], u[i]

    def swap_cols(j: int, k: int) -> None:
        for row in a:
            row[j], row[k] = row[k], row[j]
        for row in v:
            row[j], row[k] = row[k], row[j]

    def add_row(dst: int, src: int, factor: int) -> None:
        a[dst] = [x + factor * y for x, y in zip(a[dst], a[src])]
        u[dst] = [x + factor * y for x, y in zip(u[dst], u[src])]

    def add_col(dst: int, src: int, factor: int) -> None:
        for row in a:
            row[dst] += factor * row[src]
        for row in v:
            row[dst] += factor * row[src]

    t = 0
    limit = min(rows, cols)
    while t < limit:
        # Smallest nonzero |entry| in the submatrix [t:, t:] becomes the pivot.
        pivot = None
        best = None
        for i in range(t, rows):
            for j in range(t, cols):
                x = a[i][j]
                if x != 0 and (best is None or abs(x) < best):
                    best = abs(x)
                    pivot = (i, j)
        if pivot is None:
            break
        if pivot[0] != t:
            swap_rows(t, pivot[0])
        if pivot[1] != t:
            swap_cols(t, pivot[1])

        dirty = False
        for i in range(t + 1, rows):
            if a[i][t]:
                add_row(i, t, -(a[i][t] // a[t][t]))
                if a[i][t]:
                    dirty = True
        for j in range(t + 1, cols):
            if a[t][j]:
                add_col(j, t, -(a[t][j] // a[t][t]))
                if a[t][j]:
                    dirty = True
        if dirty:
            # A remainder survived; it is strictly smaller than the pivot,
            # so re-picking the pivot makes progress.
            continue

        bad = None
        for i in range(t + 1, rows):
            for j in range(t + 1, cols):
                if a[i][j] % a[t][t]:
                    bad = i
                    break
            if bad is not None:
                break
        if bad is not None:
            # Pull the offending row up; the next reduction pass leaves a
            # remainder below |pivot|, shrinking the pivot.
            add_row(t, bad, 1)
            continue
        t += 1

    for i in range(limit):
        if a[i][i] < 0:
            a[i] = [-x for x in a[i]]
            u[i] = [-x for x in u[i]]

    return SnfDecomposition(U=IntMatrix(u), D=IntMatrix(a), V=IntMatrix(v))


def det(m: IntMatrix) -> int:
    """Exact determinant via fraction-free (Bareiss) elimination."""
    if not m.is_square:
        raise ValueError("determinant requires a square matrix")
    n = m.rows
    a = m.to_lists()
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for i in range(k + 1, n):
                if a[i][k] != 0:
                    a[k], a[i] = a[i], a[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                # Exact by the Bareiss identity: prev divides the numerator.
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
        prev = a[k][k]
    return sign * a[n - 1][n - 1]


def kernel_basis(m: IntMatrix) -> list[tuple[int, ...]]:
    """Basis of the integer kernel lattice {x : M @ x = 0}.

    The basis is read off the columns of the Smith form's V that hit zero
    diagonal entries, so it is automatically saturated: if k*x lies in the
    span for some k != 0, then so does x.  Empty iff M is injective.
    """
    decomp = snf(m)
    diag = decomp.diagonal()
    basis = []
    for j in range(m.cols):
        d = diag[j] if j < len(diag) else 0
        if d == 0:
            basis.append(decomp.V.column(j))
    return basis


def hnf(m: IntMatrix) -> IntMatrix:
    """Column-style Hermite normal form spanning the same column lattice.

    Unimodular column operations only.  Pivots are positive and march down
    and to the right; in a pivot row, entries in earlier columns are reduced
    into [0, pivot); zero columns end up on the right.  The result is the
    canonical basis of the column lattice of M.
    """
    a = m.to_lists()
    rows, cols = m.rows, m.cols

    def combine_cols(p: int, j: int, s: int, y: int, xo: int, yo: int) -> None:
        # (col_p, col_j) <- (s*col_p + y*col_j, xo*col_p + yo*col_j); the
        # 2x2 coefficient matrix must be unimodular.
        for row in a:
            cp, cj = row[p], row[j]
            row[p] = s * cp + y * cj
            row[j] = xo * cp + yo * cj

    p = 0
    for i in range(rows):
        if p == cols:
            break
        for j in range(p + 1, cols):
            if a[i][j] == 0:
                continue
            g, x, y = _xgcd(a[i][p], a[i][j])
            combine_cols(p, j, x, y, -(a[i][j] // g), a[i][p] // g)
        if a[i][p] == 0:
            continue
        if a[i][p] < 0:
            for row in a:
                row[p] = -row[p]
        for j in range(p):
            q = a[i][j] // a[i][p]
            if q:
                for row in a:
                    row[j] -= q * row[p]
        p += 1
    return IntMatrix(a)


def is_irreducible(m: IntMatrix) -> bool:
    """Whether the digraph with an arc i -> j when M[i, j] > 0 is strongly
    connected (paths of length zero count, so a 1x1 matrix always is).

    Entries must be nonnegative.
    """
    if not m.is_square:
        raise ValueError("irreducibility requires a square matrix")
    n = m.rows
    for row in m:
        for x in row:
            if x < 0:
                raise InputValidationError("negative entry", "irreducibility test needs a nonnegative matrix")
    succ = [[j for j in range(n) if m[i, j] > 0] for i in range(n)]
    pred = [[i for i in range(n) if m[i, j] > 0] for j in range(n)]

    def reaches_all(adjacency: list[list[int]]) -> bool:
        seen = {0}
        stack = [0]
        while stack:
            i = stack.pop()
            for j in adjacency[i]:
                if j not in seen:
                    seen.add(j)
                    stack.append(j)
        return len(seen) == n

    return reaches_all(succ) and reaches_all(pred)


def is_permutation(m: IntMatrix) -> bool:
    """True iff M has exactly one 1 in every row and column and 0 elsewhere."""
    if not m.is_square:
        return False
    n = m.rows
    col_seen = [0] * n
    for row in m:
        ones = 0
        for j, x in enumerate(row):
            if x == 1:
                ones += 1
                col_seen[j] += 1
            elif x != 0:
                return False
        if ones != 1:
            return False
    return all(c == 1 for c in col_seen)
