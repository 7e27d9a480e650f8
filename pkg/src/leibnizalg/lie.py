"""Classical Lie-algebra tests: Killing form, Cartan criterion, solvable
radical, and splitting a split semisimple Lie algebra into simple ideals.

Splitting works through the centroid { phi : phi([x, y]) = [phi(x), y] }:
a deterministic generic centroid element is diagonalized via the rational
root theorem and its eigenspaces are the (sums of) simple ideals; recursion
finishes the job.  Algebras whose centroid element has an irrational
eigenvalue raise NonSplitUnsupported instead of being misclassified.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import gcd

from .algebra import AlgebraTable, induced_table, is_lie, subspace_product
from .errors import NonSplitUnsupported, NotLieError
from .linalg import Matrix, Subspace, det, kernel, rref, vec

__all__ = [
    "KillingForm",
    "killing_form",
    "is_semisimple_lie",
    "solvable_radical_lie",
    "centroid",
    "SimpleIdealSplit",
    "split_simple_ideals",
    "is_simple_lie",
]


def require_lie(table: AlgebraTable) -> None:
    if not is_lie(table):
        raise NotLieError("operation requires a Lie algebra table")


def ad_matrix(table: AlgebraTable, i: int) -> Matrix:
    """Matrix of z -> [e_i, z] (columns are images of basis vectors)."""
    n = table.dim
    rows = [[Fraction(0)] * n for _ in range(n)]
    for j in range(n):
        for k, c in table.products[i][j]:
            rows[k][j] = c
    return Matrix.from_rows(rows, n)


def right_mult_matrix(table: AlgebraTable, j: int) -> Matrix:
    """Matrix of z -> [z, e_j] acting on column coordinate vectors."""
    n = table.dim
    rows = [[Fraction(0)] * n for _ in range(n)]
    for i in range(n):
        for k, c in table.products[i][j]:
            rows[k][i] = c
    return Matrix.from_rows(rows, n)


@dataclass(frozen=True)
class KillingForm:
    gram: Matrix

    def value(self, x, y) -> Fraction:
        return sum(
            (a * b * self.gram.entry(i, j)
             for i, a in enumerate(vec(x)) if a
             for j, b in enumerate(vec(y)) if b),
            Fraction(0),
        )

    def determinant(self) -> Fraction:
        return det(self.gram)


@lru_cache(maxsize=None)
def killing_form(table: AlgebraTable) -> KillingForm:
    """K(e_i, e_j) = trace(ad e_i o ad e_j), exact."""
    require_lie(table)
    n = table.dim
    ads = [ad_matrix(table, i) for i in range(n)]
    gram = []
    for i in range(n):
        row = []
        for j in range(n):
            # tr(A B) = sum_{a,b} A[a][b] B[b][a], skipping zero entries
            s = Fraction(0)
            for a in range(n):
                ra = ads[i].rows[a]
                for b in range(n):
                    if ra[b]:
                        s += ra[b] * ads[j].rows[b][a]
            row.append(s)
        gram.append(row)
    return KillingForm(Matrix.from_rows(gram, n))


def is_semisimple_lie(table: AlgebraTable) -> bool:
    """Cartan criterion: nondegenerate Killing form."""
    if table.dim == 0:
        return True
    return killing_form(table).determinant() != 0


def solvable_radical_lie(table: AlgebraTable) -> Subspace:
    """{x : K(x, y) = 0 for all y in [L, L]}; the radical in characteristic 0."""
    require_lie(table)
    kf = killing_form(table)
    derived = subspace_product(table, table.full_space(), table.full_space())
    if derived.is_zero():
        return table.full_space()
    rows = [kf.gram.vec_mat(d) for d in derived.basis]
    return kernel(Matrix.from_rows(rows, table.dim))


def centroid(table: AlgebraTable) -> list[Matrix]:
    """Basis of { P : P R_j = R_j P for every right multiplication R_j }.

    For a Lie algebra this is exactly { phi : phi[x, y] = [phi x, y] }.
    """
    n = table.dim
    if n == 0:
        return []
    rms = [right_mult_matrix(table, j) for j in range(n)]
    # unknowns P[a][b], flattened index a * n + b
    rows = []
    seen = set()
    for rm in rms:
        for a in range(n):
            for b in range(n):
                # (P R - R P)[a][b] = sum_c P[a][c] R[c][b] - R[a][c] P[c][b]
                coeffs = {}
                for c in range(n):
                    if rm.rows[c][b]:
                        coeffs[a * n + c] = coeffs.get(a * n + c, Fraction(0)) + rm.rows[c][b]
                    if rm.rows[a][c]:
                        coeffs[c * n + b] = coeffs.get(c * n + b, Fraction(0)) - rm.rows[a][c]
                coeffs = {k: v for k, v in coeffs.items() if v}
                if coeffs:
                    key = tuple(sorted(coeffs.items()))
                    if key not in seen:
                        seen.add(key)
                        row = [Fraction(0)] * (n * n)
                        for k, v in coeffs.items():
                            row[k] = v
                        rows.append(row)
    if not rows:
        space = Subspace.full(n * n)
    else:
        space = kernel(Matrix.from_rows(rows, n * n))
    return [
        Matrix.from_rows([v[a * n:(a + 1) * n] for a in range(n)], n) for v in space.basis
    ]


def minimal_polynomial(m: Matrix) -> list[Fraction]:
    """Coefficients [c_0, ..., c_d] (monic, c_d = 1) of the minimal polynomial."""
    n = m.nrows
    power = Matrix.identity(n)
    flats: list[list[Fraction]] = []
    while True:
        flat = [x for row in power.rows for x in row]
        rel = _linear_relation(flats, flat)
        if rel is not None:
            return rel + [Fraction(1)]
        flats.append(flat)
        power = power @ m


def _linear_relation(basis_rows: list[list[Fraction]], target: list[Fraction]):
    """If target = sum a_i basis_rows[i], return [-a_0, ..., -a_{k-1}], else None."""
    if not basis_rows:
        return [] if all(x == 0 for x in target) else None
    width = len(target)
    aug = Matrix.from_rows(
        [list(r) + [Fraction(1 if i == j else 0) for j in range(len(basis_rows))]
         for i, r in enumerate(basis_rows)],
        width + len(basis_rows),
    )
    red = rref(aug)
    resid = list(target)
    combo = [Fraction(0)] * len(basis_rows)
    for row in red.rows:
        lead = next((j for j in range(width) if row[j] != 0), None)
        if lead is None:
            continue
        f = resid[lead]
        if f:
            for j in range(width):
                resid[j] -= f * row[j]
            for j in range(len(basis_rows)):
                combo[j] += f * row[width + j]
    if any(x != 0 for x in resid):
        return None
    return [-a for a in combo]


def rational_roots(coeffs: list[Fraction]) -> list[Fraction]:
    """All rational roots of the polynomial, by the rational root theorem on its
    primitive integer scaling; roots are removed with multiplicity."""
    work = list(coeffs)
    roots: list[Fraction] = []
    while len(work) > 1:
        root = _one_rational_root(work)
        if root is None:
            break
        roots.append(root)
        # synthetic division by (x - root): q_{d-1} = c_d; q_{i-1} = c_i + root * q_i
        quotient = [Fraction(0)] * (len(work) - 1)
        quotient[-1] = work[-1]
        for i in range(len(work) - 2, 0, -1):
            quotient[i - 1] = work[i] + root * quotient[i]
        work = quotient
    return roots


def _one_rational_root(coeffs: list[Fraction]) -> Fraction | None:
    def evaluate(x: Fraction) -> Fraction:
        acc = Fraction(0)
        for c in reversed(coeffs):
            acc = acc * x + c
        return acc

    if coeffs and coeffs[0] == 0:
        return Fraction(0)
    denom_lcm = 1
    for c in coeffs:
        denom_lcm = denom_lcm * c.denominator // gcd(denom_lcm, c.denominator)
    ints = [int(c * denom_lcm) for c in coeffs]
    content = 0
    for v in ints:
        content = gcd(content, v)
    if content > 1:
        ints = [v // content for v in ints]
    lead, const = ints[-1], ints[0]
    for p in _divisors(abs(const)):
        for q in _divisors(abs(lead)):
            for sign in (1, -1):
                cand = Fraction(sign * p, q)
                if evaluate(cand) == 0:
                    return cand
    return None


def _divisors(n: int) -> list[int]:
    out = []
    d = 1
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            if d != n // d:
                out.append(n // d)
        d += 1
    return sorted(out)


@dataclass(frozen=True)
class SimpleIdealSplit:
    ideals: tuple[Subspace, ...]
    verified: bool


_GENERIC_TRIES = 8


def split_simple_ideals(table: AlgebraTable) -> SimpleIdealSplit:
    """Decompose a semisimple Lie table into its simple ideals.

    Raises NonSplitUnsupported when a centroid element has an irrational
    eigenvalue (a simple summand that is not split over Q).
    """
    if not is_semisimple_lie(table):
        raise NotLieError("splitting requires a semisimple Lie algebra")
    ideals = _split_rec(table)
    ok = _verify_split(table, ideals)
    return SimpleIdealSplit(tuple(ideals), ok)


def _split_rec(table: AlgebraTable) -> list[Subspace]:
    n = table.dim
    cent = centroid(table)
    if len(cent) <= 1:
        return [Subspace.full(n)]
    saw_irrational = False
    for t in range(1, _GENERIC_TRIES + 1):
        psi = Matrix.zero(n, n)
        coeff = Fraction(1)
        for phi in cent:
            psi = psi + phi.scale(coeff)
            coeff *= t
        mp = minimal_polynomial(psi)
        roots = rational_roots(mp)
        if len(roots) < len(mp) - 1:
            saw_irrational = True
            continue
        distinct = sorted(set(roots))
        if len(distinct) < 2:
            continue
        out: list[Subspace] = []
        for lam in distinct:
            eig = kernel(psi - Matrix.identity(n).scale(lam))
            sub = induced_table(table, eig.basis)
            for piece in _split_rec(sub):
                lifted = Subspace.span(
                    n,
                    [
                        _combine(eig.basis, coords)
                        for coords in piece.basis
                    ],
                )
                out.append(lifted)
        return out
    raise NonSplitUnsupported(
        "centroid eigenvalues are irrational" if saw_irrational
        else "could not separate centroid eigenvalues"
    )


def _combine(basis, coords):
    out = [Fraction(0)] * len(basis[0])
    for c, b in zip(coords, basis):
        if c:
            for i, x in enumerate(b):
                out[i] += c * x
    return tuple(out)


def _verify_split(table: AlgebraTable, ideals: list[Subspace]) -> bool:
    from .algebra import is_ideal

    total = Subspace.zero(table.dim)
    for a in ideals:
        if not is_ideal(table, a):
            return False
        total = total + a
    if total != Subspace.full(table.dim):
        return False
    for i in range(len(ideals)):
        for j in range(i + 1, len(ideals)):
            if not ideals[i].intersect(ideals[j]).is_zero():
                return False
            if not subspace_product(table, ideals[i], ideals[j]).is_zero():
                return False
    return True


def is_simple_lie(table: AlgebraTable) -> bool:
    require_lie(table)
    if table.dim == 0 or not is_semisimple_lie(table):
        return False
    return len(split_simple_ideals(table).ideals) == 1
