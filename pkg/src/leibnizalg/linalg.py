"""Exact rational dense matrices and the subspace lattice.

Everything is computed over Q with `fractions.Fraction`; there is no floating
point anywhere.  Subspaces of Q^n are kept in reduced row-echelon form so that
set equality of subspaces is structural equality of values.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from .errors import DimensionMismatch

Q = Fraction
Vector = tuple[Fraction, ...]


def vec(entries: Iterable) -> Vector:
    return tuple(Fraction(x) for x in entries)


def zero_vec(n: int) -> Vector:
    return (Fraction(0),) * n


def unit_vec(n: int, i: int) -> Vector:
    return tuple(Fraction(1 if j == i else 0) for j in range(n))


def vec_add(a: Vector, b: Vector) -> Vector:
    return tuple(x + y for x, y in zip(a, b))


def vec_sub(a: Vector, b: Vector) -> Vector:
    return tuple(x - y for x, y in zip(a, b))


def vec_scale(c: Fraction, a: Vector) -> Vector:
    return tuple(c * x for x in a)


def is_zero_vec(a: Vector) -> bool:
    return all(x == 0 for x in a)


@dataclass(frozen=True)
class Matrix:
    """Dense row-major matrix of Fractions."""

    rows: tuple[Vector, ...]
    cols: int

    def __post_init__(self):
        for r in self.rows:
            if len(r) != self.cols:
                raise ValueError("ragged matrix rows")

    @property
    def nrows(self) -> int:
        return len(self.rows)

    @staticmethod
    def from_rows(rows: Sequence[Sequence], cols: int | None = None) -> "Matrix":
        rs = tuple(vec(r) for r in rows)
        if cols is None:
            if not rs:
                raise ValueError("cols required for empty matrix")
            cols = len(rs[0])
        return Matrix(rs, cols)

    @staticmethod
    def identity(n: int) -> "Matrix":
        return Matrix(tuple(unit_vec(n, i) for i in range(n)), n)

    @staticmethod
    def zero(nrows: int, ncols: int) -> "Matrix":
        return Matrix(tuple(zero_vec(ncols) for _ in range(nrows)), ncols)

    def row(self, i: int) -> Vector:
        return self.rows[i]

    def entry(self, i: int, j: int) -> Fraction:
        return self.rows[i][j]

    def transpose(self) -> "Matrix":
        return Matrix(
            tuple(tuple(self.rows[i][j] for i in range(self.nrows)) for j in range(self.cols)),
            self.nrows,
        )

    def __add__(self, other: "Matrix") -> "Matrix":
        if (self.nrows, self.cols) != (other.nrows, other.cols):
            raise DimensionMismatch("matrix shapes differ")
        return Matrix(tuple(vec_add(a, b) for a, b in zip(self.rows, other.rows)), self.cols)

    def __sub__(self, other: "Matrix") -> "Matrix":
        if (self.nrows, self.cols) != (other.nrows, other.cols):
            raise DimensionMismatch("matrix shapes differ")
        return Matrix(tuple(vec_sub(a, b) for a, b in zip(self.rows, other.rows)), self.cols)

    def scale(self, c) -> "Matrix":
        c = Fraction(c)
        return Matrix(tuple(vec_scale(c, r) for r in self.rows), self.cols)

    def __matmul__(self, other: "Matrix") -> "Matrix":
        if self.cols != other.nrows:
            raise DimensionMismatch("matrix product shapes differ")
        zero_row = zero_vec(other.cols)
        out = []
        for r in self.rows:
            acc = None
            for x, brow in zip(r, other.rows):
                if x:
                    if acc is None:
                        acc = [x * y for y in brow]
                    else:
                        for j, y in enumerate(brow):
                            if y:
                                acc[j] += x * y
            out.append(zero_row if acc is None else tuple(acc))
        return Matrix(tuple(out), other.cols)

    def mat_vec(self, v: Vector) -> Vector:
        """Matrix times column vector."""
        if len(v) != self.cols:
            raise DimensionMismatch("vector length differs from column count")
        return tuple(sum((x * y for x, y in zip(r, v)), Fraction(0)) for r in self.rows)

    def vec_mat(self, v: Vector) -> Vector:
        """Row vector times matrix (right action convention)."""
        if len(v) != self.nrows:
            raise DimensionMismatch("vector length differs from row count")
        out = [Fraction(0)] * self.cols
        for x, r in zip(v, self.rows):
            if x:
                for j, y in enumerate(r):
                    if y:
                        out[j] += x * y
        return tuple(out)

    def trace(self) -> Fraction:
        return sum((self.rows[i][i] for i in range(min(self.nrows, self.cols))), Fraction(0))

    def is_zero(self) -> bool:
        return all(is_zero_vec(r) for r in self.rows)


def rref(m: Matrix) -> Matrix:
    """Unique reduced row-echelon form; row space preserved, shape preserved."""
    rows = [list(r) for r in m.rows]
    nr, nc = len(rows), m.cols
    piv = 0
    for col in range(nc):
        if piv >= nr:
            break
        sel = next((r for r in range(piv, nr) if rows[r][col] != 0), None)
        if sel is None:
            continue
        rows[piv], rows[sel] = rows[sel], rows[piv]
        inv = 1 / rows[piv][col]
        if inv != 1:
            rows[piv] = [x * inv for x in rows[piv]]
        for r in range(nr):
            if r != piv and rows[r][col] != 0:
                f = rows[r][col]
                rows[r] = [a - f * b for a, b in zip(rows[r], rows[piv])]
        piv += 1
    return Matrix(tuple(tuple(r) for r in rows), nc)


def rank(m: Matrix) -> int:
    red = rref(m)
    return sum(1 for r in red.rows if not is_zero_vec(r))


def det(m: Matrix) -> Fraction:
    """Determinant by exact Gaussian elimination."""
    if m.nrows != m.cols:
        raise DimensionMismatch("determinant of non-square matrix")
    n = m.nrows
    rows = [list(r) for r in m.rows]
    result = Fraction(1)
    for col in range(n):
        sel = next((r for r in range(col, n) if rows[r][col] != 0), None)
        if sel is None:
            return Fraction(0)
        if sel != col:
            rows[col], rows[sel] = rows[sel], rows[col]
            result = -result
        result *= rows[col][col]
        inv = 1 / rows[col][col]
        for r in range(col + 1, n):
            if rows[r][col] != 0:
                f = rows[r][col] * inv
                rows[r] = [a - f * b for a, b in zip(rows[r], rows[col])]
    return result


def kernel(m: Matrix) -> "Subspace":
    """Right null space {v : m v = 0} as a canonical subspace of Q^cols."""
    red = rref(m)
    pivots: list[int] = []
    for r in red.rows:
        for j, x in enumerate(r):
            if x != 0:
                pivots.append(j)
                break
    free = [j for j in range(m.cols) if j not in pivots]
    basis = []
    for j in free:
        v = [Fraction(0)] * m.cols
        v[j] = Fraction(1)
        for r, p in zip(red.rows, pivots):
            v[p] = -r[j]
        basis.append(tuple(v))
    return Subspace.span(m.cols, basis)


@dataclass(frozen=True)
class Subspace:
    """Subspace of Q^ambient, represented by its RREF basis without zero rows.

    Equality of values is equality of subspaces.
    """

    ambient: int
    basis: tuple[Vector, ...]

    @property
    def dim(self) -> int:
        return len(self.basis)

    @staticmethod
    def span(ambient: int, vectors: Iterable[Sequence]) -> "Subspace":
        vs = [vec(v) for v in vectors]
        for v in vs:
            if len(v) != ambient:
                raise DimensionMismatch("vector length differs from ambient dimension")
        if not vs:
            return Subspace(ambient, ())
        red = rref(Matrix.from_rows(vs, ambient))
        return Subspace(ambient, tuple(r for r in red.rows if not is_zero_vec(r)))

    @staticmethod
    def zero(ambient: int) -> "Subspace":
        return Subspace(ambient, ())

    @staticmethod
    def full(ambient: int) -> "Subspace":
        return Subspace(ambient, tuple(unit_vec(ambient, i) for i in range(ambient)))

    def pivots(self) -> tuple[int, ...]:
        out = []
        for r in self.basis:
            for j, x in enumerate(r):
                if x != 0:
                    out.append(j)
                    break
        return tuple(out)

    def reduce(self, v: Sequence) -> Vector:
        """Remainder of v after subtracting its projection onto the basis rows."""
        w = list(vec(v))
        if len(w) != self.ambient:
            raise DimensionMismatch("vector length differs from ambient dimension")
        for r, p in zip(self.basis, self.pivots()):
            if w[p] != 0:
                f = w[p]
                w = [a - f * b for a, b in zip(w, r)]
        return tuple(w)

    def contains(self, v: Sequence) -> bool:
        return is_zero_vec(self.reduce(v))

    def contains_subspace(self, other: "Subspace") -> bool:
        return all(self.contains(v) for v in other.basis)

    def coordinates(self, v: Sequence) -> Vector:
        """Coordinates of v in the RREF basis; raises if v is outside."""
        w = vec(v)
        coords = tuple(w[p] for p in self.pivots())
        check = w
        for c, r in zip(coords, self.basis):
            check = vec_sub(check, vec_scale(c, r))
        if not is_zero_vec(check):
            raise ValueError("vector not in subspace")
        return coords

    def __add__(self, other: "Subspace") -> "Subspace":
        if self.ambient != other.ambient:
            raise DimensionMismatch("ambient dimensions differ")
        return Subspace.span(self.ambient, self.basis + other.basis)

    def complement(self) -> "Subspace":
        """Orthogonal complement w.r.t. the standard dot product."""
        if not self.basis:
            return Subspace.full(self.ambient)
        return kernel(Matrix(self.basis, self.ambient))

    def intersect(self, other: "Subspace") -> "Subspace":
        if self.ambient != other.ambient:
            raise DimensionMismatch("ambient dimensions differ")
        # (A ∩ B) = (A° + B°)°; exact over Q since the standard form is nondegenerate.
        return (self.complement() + other.complement()).complement()

    def is_zero(self) -> bool:
        return not self.basis


def subspace_sum(a: Subspace, b: Subspace) -> Subspace:
    return a + b


def subspace_intersect(a: Subspace, b: Subspace) -> Subspace:
    return a.intersect(b)


def subspace_contains(a: Subspace, v: Sequence) -> bool:
    return a.contains(v)
