"""Acceptance gate: eleven exact criteria, one pass/fail line each.

Every assertion is exact rational arithmetic (tolerance zero).  Each test
prints "criterion N: PASS — ..." on success; a failing criterion fails its
test with the offending value in the assertion message.
"""

import itertools
import json
import time
from fractions import Fraction
from functools import reduce

from leibnizalg import (
    AlgebraTable,
    ComponentSpec,
    SemisimpleSpec,
    build_example2,
    build_example3,
    build_lie_simple,
    build_semisimple,
    build_simple_leibniz,
    build_sl2,
    canonical_module,
    check_distinct_dims_split,
    check_irreducible_annihilation,
    component_ideals,
    decompose_semisimple,
    decompose_sl2,
    derived_series,
    direct_sum,
    induced_table,
    is_leibniz,
    is_lie_simple,
    is_semisimple_leibniz,
    is_simple_leibniz,
    isotypic_slices,
    killing_form,
    leibniz_witness,
    quotient,
    is_semisimple_lie,
    solvable_radical_lie,
    split_simple_ideals,
    squares_ideal,
    subspace_product,
    summand_table,
)
from leibnizalg.analysis import action_on_subspace
from leibnizalg.cli import main as cli_main
from leibnizalg.io import AlgebraDocument, document_from_json, document_to_json
from leibnizalg.linalg import Subspace, unit_vec

from tables import example3_reference


def report(n: int, text: str) -> None:
    print(f"criterion {n}: PASS — {text}")


def shared_over_first(m: int):
    spec = SemisimpleSpec(
        (ComponentSpec.sl2("sl2^1"), ComponentSpec.sl2("sl2^2")),
        (canonical_module(m, "sl2^1"),),
    )
    return build_semisimple(spec, tuple(f"x{k}" for k in range(m + 1)))


def semisimple_fixture_set():
    """Deterministic fixture list with Levi layouts (built once per session)."""
    out = []
    for m in range(1, 7):
        out.append(("simple", m, build_simple_leibniz(m)))
    lie_lists = (
        [[t] for t in (1, 2, 3, 4)]
        + [list(p) for p in itertools.product((1, 2, 3), repeat=2)]
        + [[1, 2, 3], [2, 3, 4], [1, 3, 4]]
    )
    for ts in lie_lists:
        out.append(("lie-simple", tuple(ts), build_lie_simple(ts)))
    for ts in itertools.product((1, 2), repeat=4):
        out.append(("example2", ts, build_example2(*ts)))
    out.append(("example3", (), build_example3()))
    for m in range(1, 5):
        out.append(("shared", m, shared_over_first(m)))
    return out


_FIXTURES = None


def fixtures():
    global _FIXTURES
    if _FIXTURES is None:
        _FIXTURES = semisimple_fixture_set()
    return _FIXTURES


def test_criterion_01_identity_suite():
    start = time.perf_counter()
    count = 0
    tables = [build_sl2()]
    for m in range(0, 7):
        tables.append(build_simple_leibniz(m).table)
    for length in (1, 2, 3):
        for ts in itertools.product((0, 1, 2, 3, 4), repeat=length):
            tables.append(build_lie_simple(list(ts)).table)
    for ts in itertools.product((0, 1, 2), repeat=4):
        tables.append(build_example2(*ts).table)
    tables.append(build_example3().table)
    for t in tables:
        w = leibniz_witness(t)
        assert w is None, f"identity fails on a dim-{t.dim} builder output at {w}"
        count += 1
    elapsed = time.perf_counter() - start
    assert elapsed < 10.0, f"identity suite took {elapsed:.2f}s (budget 10s)"
    report(1, f"{count} builder outputs pass the exhaustive identity check in {elapsed:.2f}s")


def test_criterion_02_simple_family():
    sl2 = build_sl2()
    for m in range(0, 7):
        ba = build_simple_leibniz(m)
        t = ba.table
        assert t.dim == m + 4, f"m={m}: dim {t.dim} != {m + 4}"
        ideal = squares_ideal(t)
        assert ideal.dim == m + 1, f"m={m}: squares ideal dim {ideal.dim} != {m + 1}"
        q = quotient(t, ideal)
        assert q.table == sl2, f"m={m}: quotient differs from the sl2 table"
        assert is_simple_leibniz(t), f"m={m}: not simple"
    report(2, "simple family m=0..6: dims, ideal dims, quotients, simplicity")


def test_criterion_03_two_copy_split():
    for ts in itertools.product((1, 2), repeat=4):
        ba = build_example2(*ts)
        rep = decompose_semisimple(ba.table, ba.layout)
        assert rep.status == "decomposed", f"t={ts}: did not decompose"
        assert len(rep.summands) == 2, f"t={ts}: {len(rep.summands)} summands"
        for s in rep.summands:
            sub = summand_table(ba.table, s)
            assert is_lie_simple(sub), f"t={ts}: summand {s.label} not Lie-simple"
            assert s.irreducible is False, f"t={ts}: summand {s.label} module not reducible"
            assert not is_simple_leibniz(sub, declared_irreducible=False), (
                f"t={ts}: reducible summand {s.label} claimed simple"
            )
    report(3, "two-copy fixtures decompose into two Lie-simple, non-simple summands")


def test_criterion_04_shared_module_fixture():
    ba = build_example3()
    t = ba.table
    assert t == example3_reference(), "built table differs from the reference table"
    ideal = ba.layout.ideal
    c1, c2 = ba.layout.components
    assert subspace_product(t, ideal, c1.subspace) == ideal
    assert subspace_product(t, ideal, c2.subspace) == ideal
    lift = lambda idxs: Subspace.span(4, [unit_vec(4, i) for i in idxs])
    dec1 = decompose_sl2(action_on_subspace(t, ideal, [c1]), c1.label)
    assert sorted(c.dim for c in dec1.chains) == [2, 2]
    assert {c.span(4) for c in dec1.chains} == {lift([0, 1]), lift([2, 3])}
    dec2 = decompose_sl2(action_on_subspace(t, ideal, [c2]), c2.label)
    assert sorted(c.dim for c in dec2.chains) == [2, 2]
    assert {c.span(4) for c in dec2.chains} == {lift([0, 2]), lift([1, 3])}
    rep = decompose_semisimple(t, ba.layout)
    assert rep.status == "not-decomposable"
    assert rep.witness[2].dim == 4
    assert rep.witness[2] == ideal
    report(4, "shared-module algebra: regeneration, 2+2 splits, witness of dim 4")


def test_criterion_05_component_ideal_clauses():
    checked = 0
    for name, params, ba in fixtures():
        ci = component_ideals(ba.table, ba.layout)
        assert ci.sum_is_ideal, f"{name}{params}: sum of I_j != I"
        for pos, label in enumerate(ci.labels):
            assert ci.each_is_ideal[pos], f"{name}{params}: I_{label} not an ideal"
            assert ci.self_regenerating[pos], f"{name}{params}: [I_{label}, S] != I_{label}"
            assert ci.summand_is_ideal[pos], f"{name}{params}: S + I_{label} not an ideal"
            checked += 1
    report(5, f"all four component-ideal clauses hold over {checked} component instances")


def test_criterion_06_annihilation_and_adversaries():
    for m in range(0, 5):
        ba = shared_over_first(m)
        other = ba.layout.components[1].subspace
        module = ba.layout.ideal_basis
        module_span = Subspace.span(ba.table.dim, module)
        assert subspace_product(ba.table, module_span, other).is_zero(), (
            f"m={m}: module not annihilated by the second component"
        )
        if m >= 1:
            rep = check_irreducible_annihilation(ba.table, ba.layout, "sl2^1")
            assert rep.hypothesis_met and rep.passed, f"m={m}: annihilation check failed"
    # adversarial extensions [x_i, y_j] = alpha * x_i must break the identity
    for m in (1, 2, 3):
        ba = shared_over_first(m)
        base = ba.table
        n = base.dim
        for alpha in (Fraction(1), Fraction(-1), Fraction(1, 2)):
            prods = {}
            for i in range(n):
                for j in range(n):
                    entry = {k: c for k, c in base.products[i][j]}
                    if entry:
                        prods[(i, j)] = entry
            for xi in range(6, n):       # module vectors
                for yj in range(3, 6):   # second sl2 copy
                    entry = prods.get((xi, yj), {})
                    entry[xi] = entry.get(xi, Fraction(0)) + alpha
                    prods[(xi, yj)] = entry
            adversarial = AlgebraTable.from_products(n, prods, base.labels)
            w = leibniz_witness(adversarial)
            assert w is not None, f"m={m}, alpha={alpha}: adversary passed the identity"
    report(6, "one-sided actions annihilate the other copy; adversaries yield witnesses")


def test_criterion_07_distinct_dims_grid():
    subsets = (
        [(d,) for d in range(1, 6)]
        + [s for s in itertools.combinations(range(1, 6), 2)]
        + [s for s in itertools.combinations(range(1, 6), 3)]
    )
    shortlist = [(2,), (3,), (2, 3), (3, 4), (4, 5)]
    specs = [(s,) for s in subsets]
    specs += [(a, b) for a in shortlist for b in shortlist]
    specs += [
        ((2,), (3,), (4,)),
        ((2, 3), (4, 5), (2,)),
        ((3,), (2, 4), (5,)),
        ((2, 3), (3, 4), (4, 5)),
        ((5,), (4,), (3,)),
    ]
    hypothesis_true = 0
    for spec_dims in specs:
        comps = tuple(
            ComponentSpec.sl2(f"S{j + 1}") for j in range(len(spec_dims))
        )
        modules = []
        labels = []
        for j, dims in enumerate(spec_dims):
            for d in dims:
                modules.append(canonical_module(d - 1, f"S{j + 1}"))
                labels.extend(f"x{k}^{j + 1}.{d}" for k in range(d))
        ba = build_semisimple(
            SemisimpleSpec(comps, tuple(modules)), tuple(labels)
        )
        rep = check_distinct_dims_split(ba.table, ba.layout)
        if rep.hypothesis_met:
            hypothesis_true += 1
            assert rep.conclusion_holds, (
                f"spec {spec_dims}: hypothesis held but decomposition failed"
            )
    assert hypothesis_true > 0
    report(
        7,
        f"distinct-dimension hypothesis implies decomposition on {hypothesis_true}"
        f" of {len(specs)} grid specs (rest: hypothesis not met)",
    )


def test_criterion_08_biconditional():
    checked = 0
    for name, params, ba in fixtures():
        ci = component_ideals(ba.table, ba.layout)
        all_zero = all(
            ci.ideals[p].intersect(ci.ideals[q]).is_zero()
            for p in range(len(ci.ideals))
            for q in range(p + 1, len(ci.ideals))
        )
        rep = decompose_semisimple(ba.table, ba.layout)
        assert (rep.status == "decomposed") == all_zero, (
            f"{name}{params}: status {rep.status} vs pairwise-zero {all_zero}"
        )
        checked += 1
    report(8, f"decomposed <=> all pairwise intersections zero, on {checked} fixtures")


def test_criterion_09_oracle_cross_checks():
    # radical: solvable ideal with semisimple quotient, on ten Lie fixtures
    ksl2 = lambda k: reduce(direct_sum, [build_sl2()] * k)
    abelian = lambda d: AlgebraTable.from_products(d, {})
    solv2 = AlgebraTable.from_products(2, {(0, 1): {0: 1}, (1, 0): {0: -1}})
    heis = AlgebraTable.from_products(3, {(0, 1): {2: 1}, (1, 0): {2: -1}})
    lie_fixtures = [
        ksl2(1), ksl2(2), ksl2(3),
        abelian(1), abelian(2), abelian(3),
        direct_sum(build_sl2(), abelian(1)),
        direct_sum(build_sl2(), abelian(2)),
        solv2,
        direct_sum(build_sl2(), heis),
    ]
    assert len(lie_fixtures) == 10
    for t in lie_fixtures:
        rad = solvable_radical_lie(t)
        if rad.dim:
            sub = induced_table(t, rad.basis)
            assert derived_series(sub).solvable
        q = quotient(t, rad)
        assert is_semisimple_lie(q.table)
    # simple-ideal splitting recovers the construction blocks
    for k in (1, 2, 3):
        split = split_simple_ideals(ksl2(k))
        assert split.verified and len(split.ideals) == k
        blocks = {
            Subspace.span(3 * k, [unit_vec(3 * k, 3 * j + i) for i in range(3)])
            for j in range(k)
        }
        assert set(split.ideals) == blocks
    # frozen Killing gram of the sl2 table in basis order (e, f, h)
    kf = killing_form(build_sl2())
    gram = [[int(x) for x in row] for row in kf.gram.rows]
    assert gram == [[0, -4, 0], [-4, 0, 0], [0, 0, 8]], f"gram {gram}"
    assert kf.determinant() == -128
    report(9, "radical/quotient on 10 Lie fixtures; block recovery; frozen Killing gram")


def test_criterion_10_isotypic_slices():
    ba = build_example3()
    rep = isotypic_slices(ba.table, ba.layout, "sl2^1")
    assert rep.hypothesis_met
    assert rep.equal_dim == 2 and rep.multiplicity == 2
    assert [s.dim for s in rep.slices] == [2, 2]
    assert rep.slices_are_submodules
    assert rep.sum_equals_intersection
    assert rep.intersection == ba.layout.ideal
    report(10, "two slices of dim 2, closed under the second copy, summing to I")


def test_criterion_11_cli_contract(tmp_path):
    docs = {
        "sl2": AlgebraDocument(build_sl2()),
        "simple3": AlgebraDocument(*astuple(build_simple_leibniz(3))),
        "lie12": AlgebraDocument(*astuple(build_lie_simple([1, 2]))),
        "ex2": AlgebraDocument(*astuple(build_example2(1, 2, 3, 4))),
        "ex3": AlgebraDocument(*astuple(build_example3())),
    }
    for name, doc in docs.items():
        text = document_to_json(doc)
        assert document_to_json(document_from_json(text)) == text, (
            f"{name}: round trip is not byte-stable"
        )
    ex3 = tmp_path / "ex3.json"
    ex2 = tmp_path / "ex2.json"
    assert cli_main(["build", "example3", "--out", str(ex3)]) == 0
    assert cli_main(["build", "example2", "--t", "1,2,3,4", "--out", str(ex2)]) == 0
    assert cli_main(["verify", str(ex3)]) == 0
    assert cli_main(["decompose", str(ex3)]) == 1
    assert cli_main(["decompose", str(ex2)]) == 0
    assert cli_main(["build", "bogus", "--out", str(tmp_path / "x.json")]) == 2
    bad = tmp_path / "bad.json"
    bad.write_text("{")
    assert cli_main(["verify", str(bad)]) == 2
    nonleibniz = tmp_path / "nl.json"
    nonleibniz.write_text(
        json.dumps(
            {
                "format_version": "1",
                "dim": 2,
                "basis": ["a", "b"],
                "brackets": {"0,1": {"0": "1"}, "1,1": {"1": "1"}},
            }
        )
    )
    assert cli_main(["verify", str(nonleibniz)]) == 1
    report(11, "byte-stable round trips; exit codes 0/1/2 observed as specified")


def astuple(ba):
    return (ba.table, ba.layout)
