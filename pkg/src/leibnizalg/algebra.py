"""Structure-constant presentation of right Leibniz algebras.

A table stores the bracket [e_i, e_j] = sum_k c[i][j][k] e_k sparsely; all
bracket-level computations (identity checks, ideals, series, quotients,
products) live here.  The right convention is fixed throughout:

    [x, [y, z]] = [[x, y], z] - [[x, z], y]
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Mapping, Sequence

from .errors import DimensionMismatch, ModuleAxiomError, NotIdealError, NotLeibnizError, NotLieError
from .linalg import (
    Matrix,
    Subspace,
    Vector,
    is_zero_vec,
    kernel,
    rref,
    unit_vec,
    vec,
)

SparseRow = tuple[tuple[int, Fraction], ...]


@dataclass(frozen=True)
class AlgebraTable:
    """Immutable structure-constant table on an n-dimensional space."""

    dim: int
    products: tuple[tuple[SparseRow, ...], ...]
    labels: tuple[str, ...]

    def __post_init__(self):
        if len(self.labels) != self.dim or len(self.products) != self.dim:
            raise ValueError("table shape does not match dimension")

    @staticmethod
    def from_products(
        dim: int,
        products: Mapping[tuple[int, int], Mapping[int, object]],
        labels: Sequence[str] | None = None,
    ) -> "AlgebraTable":
        if labels is None:
            labels = tuple(f"b{i}" for i in range(dim))
        grid = [[{} for _ in range(dim)] for _ in range(dim)]
        for (i, j), row in products.items():
            if not (0 <= i < dim and 0 <= j < dim):
                raise ValueError(f"product index ({i},{j}) out of range")
            for k, c in row.items():
                if not 0 <= k < dim:
                    raise ValueError(f"target index {k} out of range")
                c = Fraction(c)
                if c:
                    grid[i][j][k] = c
        packed = tuple(
            tuple(tuple(sorted(grid[i][j].items())) for j in range(dim)) for i in range(dim)
        )
        return AlgebraTable(dim, packed, tuple(labels))

    def product(self, i: int, j: int) -> SparseRow:
        return self.products[i][j]

    def product_vec(self, i: int, j: int) -> Vector:
        out = [Fraction(0)] * self.dim
        for k, c in self.products[i][j]:
            out[k] = c
        return tuple(out)

    def relabel(self, labels: Sequence[str]) -> "AlgebraTable":
        return AlgebraTable(self.dim, self.products, tuple(labels))

    def full_space(self) -> Subspace:
        return Subspace.full(self.dim)


def _num(c: Fraction):
    # Plain ints keep the exhaustive identity loops fast; Fractions mix in freely.
    return int(c) if c.denominator == 1 else c


@lru_cache(maxsize=None)
def _sparse_cols(table: AlgebraTable):
    """Right-multiplication maps: col[j][i] = sparse dict of [e_i, e_j]."""
    n = table.dim
    return tuple(
        tuple({k: _num(c) for k, c in table.products[i][j]} for i in range(n))
        for j in range(n)
    )


def _apply_right(cols_j, sv: dict) -> dict:
    """Image of a sparse vector under right multiplication by e_j."""
    out: dict = {}
    for i, x in sv.items():
        for k, c in cols_j[i].items():
            v = out.get(k, 0) + x * c
            if v:
                out[k] = v
            elif k in out:
                del out[k]
    return out


def bracket(table: AlgebraTable, x: Sequence, y: Sequence) -> Vector:
    """Bilinear extension of the table to coordinate vectors."""
    xv, yv = vec(x), vec(y)
    if len(xv) != table.dim or len(yv) != table.dim:
        raise DimensionMismatch("element length differs from algebra dimension")
    out = [Fraction(0)] * table.dim
    for i, a in enumerate(xv):
        if not a:
            continue
        for j, b in enumerate(yv):
            if not b:
                continue
            for k, c in table.products[i][j]:
                out[k] += a * b * c
    return tuple(out)


@lru_cache(maxsize=None)
def leibniz_witness(table: AlgebraTable) -> tuple[int, int, int] | None:
    """First basis triple (i, j, k) violating the Leibniz identity, or None.

    Checks [e_i, [e_j, e_k]] = [[e_i, e_j], e_k] - [[e_i, e_k], e_j]
    exhaustively over all n^3 triples; basis checking suffices by bilinearity.
    """
    n = table.dim
    cols = _sparse_cols(table)
    for j in range(n):
        cj = cols[j]
        for k in range(n):
            ck = cols[k]
            cjk = {m: _num(c) for m, c in table.products[j][k]}
            for i in range(n):
                lhs: dict = {}
                for m, c in cjk.items():
                    for t, d in cols[m][i].items():
                        v = lhs.get(t, 0) + c * d
                        if v:
                            lhs[t] = v
                        elif t in lhs:
                            del lhs[t]
                rhs = _apply_right(ck, cj[i])
                for t, d in _apply_right(cj, ck[i]).items():
                    v = rhs.get(t, 0) - d
                    if v:
                        rhs[t] = v
                    elif t in rhs:
                        del rhs[t]
                if lhs != rhs:
                    return (i, j, k)
    return None


def is_leibniz(table: AlgebraTable) -> bool:
    return leibniz_witness(table) is None


def require_leibniz(table: AlgebraTable) -> None:
    w = leibniz_witness(table)
    if w is not None:
        raise NotLeibnizError(w)


@lru_cache(maxsize=None)
def is_lie(table: AlgebraTable) -> bool:
    """True iff the table is Leibniz, alternating and antisymmetric."""
    n = table.dim
    for i in range(n):
        if table.products[i][i]:
            return False
        for j in range(i + 1, n):
            neg = tuple((k, -c) for k, c in table.products[j][i])
            if table.products[i][j] != neg:
                return False
    return is_leibniz(table)


def subspace_product(table: AlgebraTable, a: Subspace, b: Subspace) -> Subspace:
    """span{ [x, y] : x in basis(a), y in basis(b) }; correct by bilinearity."""
    if a.ambient != table.dim or b.ambient != table.dim:
        raise DimensionMismatch("subspace ambient differs from algebra dimension")
    return Subspace.span(
        table.dim, [bracket(table, x, y) for x in a.basis for y in b.basis]
    )


def is_ideal(table: AlgebraTable, a: Subspace) -> bool:
    full = table.full_space()
    return a.contains_subspace(subspace_product(table, a, full)) and a.contains_subspace(
        subspace_product(table, full, a)
    )


def ideal_closure(table: AlgebraTable, s: Subspace) -> Subspace:
    """Smallest subspace containing s closed under bracketing with the algebra."""
    full = table.full_space()
    current = s
    for _ in range(table.dim + 1):
        grown = current + subspace_product(table, current, full) + subspace_product(
            table, full, current
        )
        if grown == current:
            return current
        current = grown
    return current


def squares_ideal(table: AlgebraTable) -> Subspace:
    """Span of all squares [x, x]; by polarization the span of
    { [e_i, e_i] } and { [e_i, e_j] + [e_j, e_i] : i < j }.
    """
    require_leibniz(table)
    n = table.dim
    gens = []
    for i in range(n):
        gens.append(table.product_vec(i, i))
        for j in range(i + 1, n):
            gens.append(
                tuple(
                    a + b
                    for a, b in zip(table.product_vec(i, j), table.product_vec(j, i))
                )
            )
    result = Subspace.span(n, gens)
    if not is_ideal(table, result):
        raise NotIdealError("squares span is not an ideal; table is not Leibniz")
    return result


def right_annihilator(table: AlgebraTable) -> Subspace:
    """{a : [x, a] = 0 for all x}, via the stacked left-multiplication system."""
    n = table.dim
    rows = []
    for i in range(n):
        # map a -> [e_i, a]; row block k of the system: sum_j a_j c[i][j][k]
        block = [[Fraction(0)] * n for _ in range(n)]
        for j in range(n):
            for k, c in table.products[i][j]:
                block[k][j] = c
        rows.extend(block)
    return kernel(Matrix.from_rows(rows, n))


def left_annihilator(table: AlgebraTable) -> Subspace:
    """{a : [a, x] = 0 for all x}."""
    n = table.dim
    rows = []
    for j in range(n):
        block = [[Fraction(0)] * n for _ in range(n)]
        for i in range(n):
            for k, c in table.products[i][j]:
                block[k][i] = c
        rows.extend(block)
    return kernel(Matrix.from_rows(rows, n))


@dataclass(frozen=True)
class DerivedSeries:
    terms: tuple[Subspace, ...]
    solvable: bool
    index: int | None


def derived_series(table: AlgebraTable) -> DerivedSeries:
    """L^1 = L, L^[n+1] = [L^[n], L^[n]] until zero or stabilization."""
    terms = [table.full_space()]
    while True:
        nxt = subspace_product(table, terms[-1], terms[-1])
        if nxt.is_zero():
            terms.append(nxt)
            return DerivedSeries(tuple(terms), True, len(terms))
        if nxt == terms[-1]:
            return DerivedSeries(tuple(terms), False, None)
        terms.append(nxt)


@dataclass(frozen=True)
class Quotient:
    table: AlgebraTable
    projection: Matrix  # (dim quotient) x (dim L), acts on column coordinate vectors
    representatives: tuple[int, ...]  # ambient basis indices of the coset representatives


def quotient(table: AlgebraTable, ideal: Subspace) -> Quotient:
    """Induced table on the non-pivot coordinates of the ideal's RREF basis."""
    if ideal.ambient != table.dim:
        raise DimensionMismatch("ideal ambient differs from algebra dimension")
    if not is_ideal(table, ideal):
        raise NotIdealError("quotient by a non-ideal subspace")
    n = table.dim
    nonpiv = [j for j in range(n) if j not in ideal.pivots()]
    q = len(nonpiv)

    def project(v: Sequence) -> Vector:
        reduced = ideal.reduce(v)
        return tuple(reduced[j] for j in nonpiv)

    proj = Matrix.from_rows(
        [[project(unit_vec(n, i))[a] for i in range(n)] for a in range(q)], n
    ) if q else Matrix.zero(0, n)
    prods = {}
    for a, ia in enumerate(nonpiv):
        for b, ib in enumerate(nonpiv):
            w = project(bracket(table, unit_vec(n, ia), unit_vec(n, ib)))
            if not is_zero_vec(w):
                prods[(a, b)] = {k: c for k, c in enumerate(w) if c}
    qtable = AlgebraTable.from_products(q, prods, tuple(table.labels[j] for j in nonpiv))
    return Quotient(qtable, proj, tuple(nonpiv))


def direct_sum(a: AlgebraTable, b: AlgebraTable) -> AlgebraTable:
    """Block-diagonal table; both blocks are ideals with zero cross products."""
    n, m = a.dim, b.dim
    prods = {}
    for i in range(n):
        for j in range(n):
            if a.products[i][j]:
                prods[(i, j)] = dict(a.products[i][j])
    for i in range(m):
        for j in range(m):
            if b.products[i][j]:
                prods[(n + i, n + j)] = {n + k: c for k, c in b.products[i][j]}
    return AlgebraTable.from_products(n + m, prods, a.labels + b.labels)


def induced_table(
    table: AlgebraTable, vectors: Sequence[Sequence], labels: Sequence[str] | None = None
) -> AlgebraTable:
    """Table of the subalgebra spanned by `vectors`, in that ordered basis.

    Raises if the vectors are dependent or their span is not bracket-closed.
    """
    vs = [vec(v) for v in vectors]
    span = Subspace.span(table.dim, vs)
    if span.dim != len(vs):
        raise ValueError("induced basis vectors are linearly dependent")
    # coordinates w.r.t. the ordered (non-RREF) basis: solve through the RREF coords
    change = Matrix.from_rows([span.coordinates(v) for v in vs], span.dim)
    inv = _invert(change)
    prods = {}
    for i, x in enumerate(vs):
        for j, y in enumerate(vs):
            w = bracket(table, x, y)
            if not span.contains(w):
                raise ValueError("span is not closed under the bracket")
            coords = inv.vec_mat(span.coordinates(w))
            entries = {k: c for k, c in enumerate(coords) if c}
            if entries:
                prods[(i, j)] = entries
    return AlgebraTable.from_products(len(vs), prods, labels)


def restrict(table: AlgebraTable, sub: Subspace, labels: Sequence[str] | None = None) -> AlgebraTable:
    """Induced table on the RREF basis of a bracket-closed subspace."""
    return induced_table(table, sub.basis, labels)


def _invert(m: Matrix) -> Matrix:
    n = m.nrows
    if n != m.cols:
        raise DimensionMismatch("inverse of non-square matrix")
    aug = Matrix.from_rows(
        [list(m.rows[i]) + list(unit_vec(n, i)) for i in range(n)], 2 * n
    )
    red = rref(aug)
    left = Matrix.from_rows([r[:n] for r in red.rows], n)
    if left != Matrix.identity(n):
        raise ValueError("matrix is singular")
    return Matrix.from_rows([r[n:] for r in red.rows], n)


def hemisemidirect(
    lie_table: AlgebraTable,
    action_matrices: Sequence[Matrix],
    module_labels: Sequence[str] | None = None,
) -> AlgebraTable:
    """Table on G + M with [x + m, y + n] = [x, y] + m . y.

    `action_matrices[j]` is the right action of the j-th basis element of G on
    M (row-vector convention).  M lands in the right annihilator: [M, M] = 0
    and [G, M] = 0 by construction.
    """
    if not is_lie(lie_table):
        raise NotLieError("hemisemidirect product requires a Lie algebra on the left")
    g = lie_table.dim
    if len(action_matrices) != g:
        raise ModuleAxiomError("need one action matrix per Lie basis element")
    d = action_matrices[0].nrows if action_matrices else 0
    for mtx in action_matrices:
        if mtx.nrows != d or mtx.cols != d:
            raise ModuleAxiomError("action matrices must be square of equal size")
    # right-module axiom: A_{[g_i, g_j]} = A_i A_j - A_j A_i
    for i in range(g):
        for j in range(g):
            expected = Matrix.zero(d, d)
            for k, c in lie_table.products[i][j]:
                expected = expected + action_matrices[k].scale(c)
            got = action_matrices[i] @ action_matrices[j] - action_matrices[j] @ action_matrices[i]
            if got != expected:
                raise ModuleAxiomError(f"module axiom fails on basis pair ({i}, {j})")
    if module_labels is None:
        module_labels = tuple(f"x{a}" for a in range(d))
    prods = {}
    for i in range(g):
        for j in range(g):
            if lie_table.products[i][j]:
                prods[(i, j)] = dict(lie_table.products[i][j])
    for a in range(d):
        for j in range(g):
            row = action_matrices[j].row(a)
            entries = {g + k: c for k, c in enumerate(row) if c}
            if entries:
                prods[(g + a, j)] = entries
    return AlgebraTable.from_products(g + d, prods, lie_table.labels + tuple(module_labels))


def same_products(a: AlgebraTable, b: AlgebraTable) -> bool:
    """Structural equality of the bracket tables, ignoring labels."""
    return a.dim == b.dim and a.products == b.products
