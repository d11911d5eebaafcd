"""Dense exact matrices over the Gaussian rationals.

Everything here runs in exact arithmetic: Gaussian elimination pivots on the
first nonzero entry (no pivot-size heuristics), and rank / kernel / column
space fall out of a single reduced row echelon computation.  Matrices are
immutable; every operation returns a fresh value.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, List, Sequence, Tuple

from .errors import DimensionMismatch, SingularMatrix
from .scalars import GaussianRational, ZERO, ONE, as_scalar

Vector = Tuple[GaussianRational, ...]


def vector(entries: Iterable) -> Vector:
    return tuple(as_scalar(e) for e in entries)


def inner(u: Sequence, v: Sequence) -> GaussianRational:
    """Hermitian inner product <u, v> = sum conj(u_i) v_i."""
    if len(u) != len(v):
        raise DimensionMismatch(f"vector lengths {len(u)} vs {len(v)}")
    acc = ZERO
    for a, b in zip(u, v):
        acc = acc + as_scalar(a).conjugate() * as_scalar(b)
    return acc


class Matrix:
    __slots__ = ("rows", "cols", "_data")

    def __init__(self, rows_of_entries: Sequence[Sequence]):
        data = tuple(tuple(as_scalar(e) for e in row) for row in rows_of_entries)
        if data and any(len(r) != len(data[0]) for r in data):
            raise DimensionMismatch("ragged rows")
        self._data = data
        self.rows = len(data)
        self.cols = len(data[0]) if data else 0

    # -- constructors ------------------------------------------------------

    @classmethod
    def _raw(cls, data, rows: int, cols: int) -> "Matrix":
        # internal fast path: entries are known-good scalars already
        m = cls.__new__(cls)
        m._data = tuple(tuple(r) for r in data)
        m.rows = rows
        m.cols = cols
        return m

    @classmethod
    def zeros(cls, rows: int, cols: int) -> "Matrix":
        return cls([[ZERO] * cols for _ in range(rows)])

    @classmethod
    def identity(cls, n: int) -> "Matrix":
        return cls([[ONE if i == j else ZERO for j in range(n)] for i in range(n)])

    @classmethod
    def from_columns(cls, columns: Sequence[Sequence], rows: int | None = None) -> "Matrix":
        cols = [vector(c) for c in columns]
        if not cols:
            if rows is None:
                raise DimensionMismatch("row count needed for an empty column list")
            return cls.zeros(rows, 0)
        n = len(cols[0])
        if any(len(c) != n for c in cols):
            raise DimensionMismatch("columns of unequal length")
        return cls([[cols[j][i] for j in range(len(cols))] for i in range(n)])

    @classmethod
    def diagonal(cls, entries: Sequence) -> "Matrix":
        d = vector(entries)
        n = len(d)
        return cls([[d[i] if i == j else ZERO for j in range(n)] for i in range(n)])

    # -- access ------------------------------------------------------------

    def __getitem__(self, ij) -> GaussianRational:
        i, j = ij
        return self._data[i][j]

    def row(self, i: int) -> Vector:
        return self._data[i]

    def column(self, j: int) -> Vector:
        return tuple(self._data[i][j] for i in range(self.rows))

    def columns(self) -> List[Vector]:
        return [self.column(j) for j in range(self.cols)]

    @property
    def shape(self) -> Tuple[int, int]:
        return (self.rows, self.cols)

    # -- algebra -----------------------------------------------------------

    def __add__(self, other: "Matrix") -> "Matrix":
        self._same_shape(other)
        return Matrix._raw(
            (
                [a + b for a, b in zip(r1, r2)]
                for r1, r2 in zip(self._data, other._data)
            ),
            self.rows,
            self.cols,
        )

    def __sub__(self, other: "Matrix") -> "Matrix":
        self._same_shape(other)
        return Matrix._raw(
            (
                [a - b for a, b in zip(r1, r2)]
                for r1, r2 in zip(self._data, other._data)
            ),
            self.rows,
            self.cols,
        )

    def __neg__(self) -> "Matrix":
        return Matrix._raw(([-a for a in r] for r in self._data), self.rows, self.cols)

    def scale(self, c) -> "Matrix":
        c = as_scalar(c)
        return Matrix._raw(([c * a for a in r] for r in self._data), self.rows, self.cols)

    def __matmul__(self, other: "Matrix") -> "Matrix":
        if self.cols != other.rows:
            raise DimensionMismatch(f"{self.shape} @ {other.shape}")
        orows = other._data
        out = []
        for r in self._data:
            acc = [ZERO] * other.cols
            for a, orow in zip(r, orows):
                if a.is_zero:  # projection matrices are often sparse
                    continue
                acc = [p if b.is_zero else p + a * b for p, b in zip(acc, orow)]
            out.append(acc)
        return Matrix._raw(out, self.rows, other.cols)

    def apply(self, v: Sequence) -> Vector:
        v = vector(v)
        if self.cols != len(v):
            raise DimensionMismatch(f"{self.shape} applied to length-{len(v)} vector")
        return tuple(sum((a * b for a, b in zip(r, v)), ZERO) for r in self._data)

    def transpose(self) -> "Matrix":
        return Matrix._raw(zip(*self._data), self.cols, self.rows)

    def conj(self) -> "Matrix":
        return Matrix._raw(
            ([a.conjugate() for a in r] for r in self._data), self.rows, self.cols
        )

    def adjoint(self) -> "Matrix":
        """Conjugate transpose; an involution."""
        return self.transpose().conj()

    def trace(self) -> GaussianRational:
        if self.rows != self.cols:
            raise DimensionMismatch("trace of a non-square matrix")
        return sum((self._data[i][i] for i in range(self.rows)), ZERO)

    # -- predicates --------------------------------------------------------

    def __eq__(self, other):
        if not isinstance(other, Matrix):
            return NotImplemented
        return self._data == other._data

    def __hash__(self):
        return hash(self._data)

    def is_zero(self) -> bool:
        return all(a.is_zero for r in self._data for a in r)

    def is_hermitian(self) -> bool:
        return self.rows == self.cols and self == self.adjoint()

    # -- elimination -------------------------------------------------------

    def rref(self) -> Tuple["Matrix", Tuple[int, ...]]:
        """Reduced row echelon form and the pivot column indices.

        Pivoting takes the first nonzero entry in each column, which is exact
        over the rationals.
        """
        m = [list(r) for r in self._data]
        pivots: List[int] = []
        prow = 0
        for col in range(self.cols):
            if prow >= self.rows:
                break
            sel = next((r for r in range(prow, self.rows) if not m[r][col].is_zero), None)
            if sel is None:
                continue
            m[prow], m[sel] = m[sel], m[prow]
            inv = ONE / m[prow][col]
            m[prow] = [inv * a for a in m[prow]]
            for r in range(self.rows):
                if r != prow and not m[r][col].is_zero:
                    f = m[r][col]
                    m[r] = [a - f * b for a, b in zip(m[r], m[prow])]
            pivots.append(col)
            prow += 1
        return Matrix._raw(m, self.rows, self.cols), tuple(pivots)

    def rank(self) -> int:
        return len(self.rref()[1])

    def kernel_basis(self) -> List[Vector]:
        """Basis of the right null space, one vector per free column."""
        r, pivots = self.rref()
        pivot_set = set(pivots)
        free = [j for j in range(self.cols) if j not in pivot_set]
        basis = []
        for f in free:
            v = [ZERO] * self.cols
            v[f] = ONE
            for row_idx, p in enumerate(pivots):
                v[p] = -r[row_idx, f]
            basis.append(tuple(v))
        return basis

    def column_space_basis(self) -> List[Vector]:
        """The pivot columns of the original matrix: a basis of the column space."""
        _, pivots = self.rref()
        return [self.column(j) for j in pivots]

    def inverse(self) -> "Matrix":
        if self.rows != self.cols:
            raise DimensionMismatch("inverse of a non-square matrix")
        n = self.rows
        eye = Matrix.identity(n)
        aug = Matrix._raw(
            (list(self._data[i]) + list(eye._data[i]) for i in range(n)), n, 2 * n
        )
        r, pivots = aug.rref()
        if pivots != tuple(range(n)):
            raise SingularMatrix("matrix is singular")
        return Matrix._raw((row[n:] for row in r._data), n, n)

    # -- stacking ----------------------------------------------------------

    def hstack(self, other: "Matrix") -> "Matrix":
        if self.rows != other.rows:
            raise DimensionMismatch("hstack row mismatch")
        return Matrix._raw(
            (a + b for a, b in zip(self._data, other._data)),
            self.rows,
            self.cols + other.cols,
        )

    def vstack(self, other: "Matrix") -> "Matrix":
        if self.cols != other.cols:
            raise DimensionMismatch("vstack column mismatch")
        return Matrix._raw(self._data + other._data, self.rows + other.rows, self.cols)

    # -- misc --------------------------------------------------------------

    def entries(self) -> Tuple[Tuple[GaussianRational, ...], ...]:
        return self._data

    def __repr__(self):
        body = "; ".join(" ".join(str(a) for a in r) for r in self._data)
        return f"Matrix[{self.rows}x{self.cols}]({body})"

    def _same_shape(self, other: "Matrix"):
        if self.shape != other.shape:
            raise DimensionMismatch(f"{self.shape} vs {other.shape}")


def real_fraction(x: GaussianRational) -> Fraction:
    """Assert a scalar is real and return it as a Fraction."""
    if not x.is_real:
        raise ValueError(f"expected a real scalar, got {x}")
    return x.re
