from fractions import Fraction
from functools import reduce

from leibnizalg import (
    build_sl2,
    centroid,
    derived_series,
    direct_sum,
    induced_table,
    is_semisimple_lie,
    is_simple_lie,
    killing_form,
    quotient,
    solvable_radical_lie,
    split_simple_ideals,
)
from leibnizalg.algebra import AlgebraTable
from leibnizalg.lie import minimal_polynomial, rational_roots
from leibnizalg.linalg import Matrix, Subspace, unit_vec


def ksl2(k):
    return reduce(direct_sum, [build_sl2()] * k)


def test_killing_gram_sl2():
    # frozen oracle values for the basis order (e, f, h)
    kf = killing_form(build_sl2())
    assert [[int(x) for x in row] for row in kf.gram.rows] == [
        [0, -4, 0],
        [-4, 0, 0],
        [0, 0, 8],
    ]
    assert kf.determinant() == -128


def test_semisimple_and_simple():
    assert is_semisimple_lie(build_sl2())
    assert is_simple_lie(build_sl2())
    two = ksl2(2)
    assert is_semisimple_lie(two)
    assert not is_simple_lie(two)


def test_radical_of_semisimple_is_zero():
    for k in (1, 2, 3):
        assert solvable_radical_lie(ksl2(k)).is_zero()


def test_radical_abelian():
    # 2-dim abelian Lie algebra: everything is radical
    t = AlgebraTable.from_products(2, {})
    assert solvable_radical_lie(t).dim == 2
    assert not is_semisimple_lie(t)


def test_radical_mixed():
    # sl2 + 1-dim center: radical is the center
    t = direct_sum(build_sl2(), AlgebraTable.from_products(1, {}))
    rad = solvable_radical_lie(t)
    assert rad.dim == 1
    assert rad.contains(unit_vec(4, 3))
    # radical is a solvable ideal with semisimple quotient
    sub = induced_table(t, rad.basis)
    assert derived_series(sub).solvable
    q = quotient(t, rad)
    assert is_semisimple_lie(q.table)


def test_centroid_counts_summands():
    assert len(centroid(build_sl2())) == 1
    assert len(centroid(ksl2(2))) == 2
    assert len(centroid(ksl2(3))) == 3


def test_split_recovers_blocks():
    for k in (1, 2, 3):
        t = ksl2(k)
        split = split_simple_ideals(t)
        assert split.verified
        assert len(split.ideals) == k
        blocks = {
            Subspace.span(3 * k, [unit_vec(3 * k, 3 * j + i) for i in range(3)])
            for j in range(k)
        }
        assert set(split.ideals) == blocks


def test_minimal_polynomial_diagonal():
    m = Matrix.from_rows([[1, 0], [0, 2]], 2)
    # (x-1)(x-2) = x^2 - 3x + 2
    assert minimal_polynomial(m) == [Fraction(2), Fraction(-3), Fraction(1)]


def test_rational_roots():
    # (x-1)(x+2)(2x-3) = 2x^3 + x^2 - 7x ... expand: (x-1)(x+2) = x^2+x-2
    # (x^2+x-2)(2x-3) = 2x^3 - x^2 - 7x + 6
    coeffs = [Fraction(6), Fraction(-7), Fraction(-1), Fraction(2)]
    assert sorted(rational_roots(coeffs)) == [
        Fraction(-2),
        Fraction(1),
        Fraction(3, 2),
    ]
