from fractions import Fraction

import pytest

from leibnizalg import (
    build_sl2,
    canonical_module,
    decompose_sl2,
    direct_sum_modules,
    is_irreducible_sl2,
    tensor_pair_module,
    trivial_module,
)
from leibnizalg.errors import ModuleAxiomError, NotSemisimpleAction
from leibnizalg.modules import (
    ComponentAction,
    ModuleAction,
    highest_weight_vectors,
    validate_commutation,
    validate_component_action,
    weight_spaces,
)
from leibnizalg.linalg import Matrix


def test_canonical_module_axiom():
    sl2 = build_sl2()
    for m in range(0, 6):
        act = canonical_module(m)
        validate_component_action(sl2, act.components[0])


def test_canonical_commutators():
    # E F - F E = H etc., in the chain normalization
    for m in (1, 2, 3, 4):
        c = canonical_module(m).components[0]
        assert c.e @ c.f - c.f @ c.e == c.h
        assert c.e @ c.h - c.h @ c.e == c.e.scale(2)
        assert c.f @ c.h - c.h @ c.f == c.f.scale(-2)


def test_weight_spaces_and_hw():
    act = canonical_module(3)
    ws = weight_spaces(act, "sl2")
    assert sorted(ws) == [-3, -1, 1, 3]
    assert all(s.dim == 1 for s in ws.values())
    hw = highest_weight_vectors(act, "sl2")
    assert hw.dim == 1


def test_decompose_single_chain():
    for m in range(0, 5):
        act = canonical_module(m)
        dec = decompose_sl2(act, "sl2")
        assert len(dec.chains) == 1
        assert dec.chains[0].highest_weight == m
        assert dec.multiplicities == {m: 1}
        assert is_irreducible_sl2(act, "sl2")


def test_decompose_direct_sum():
    act = direct_sum_modules([canonical_module(1), canonical_module(2)])
    dec = decompose_sl2(act, "sl2")
    assert sorted(c.dim for c in dec.chains) == [2, 3]
    assert dec.multiplicities == {1: 1, 2: 1}
    assert not is_irreducible_sl2(act, "sl2")


def test_trivial_module_chains():
    act = trivial_module(3)
    dec = decompose_sl2(act, "sl2")
    assert [c.highest_weight for c in dec.chains] == [0, 0, 0]


def test_tensor_pair_commutes_and_splits():
    act = tensor_pair_module(1, 1)
    validate_commutation(act)
    sl2 = build_sl2()
    for comp in act.components:
        validate_component_action(sl2, comp)
    dec_a = decompose_sl2(act, "A")
    dec_b = decompose_sl2(act, "B")
    assert [c.dim for c in dec_a.chains] == [2, 2]
    assert [c.dim for c in dec_b.chains] == [2, 2]


def test_non_semisimple_action_rejected():
    # H with a non-integer eigenvalue cannot come from a finite chain
    bad = ComponentAction(
        "sl2",
        (
            Matrix.zero(1, 1),
            Matrix.zero(1, 1),
            Matrix.from_rows([[Fraction(1, 2)]], 1),
        ),
        (0, 1, 2),
    )
    act = ModuleAction(1, (bad,))
    with pytest.raises(NotSemisimpleAction):
        weight_spaces(act, "sl2")


def test_validate_component_action_rejects():
    sl2 = build_sl2()
    bad = ComponentAction(
        "sl2",
        (Matrix.from_rows([[1]], 1), Matrix.zero(1, 1), Matrix.zero(1, 1)),
        (0, 1, 2),
    )
    with pytest.raises(ModuleAxiomError):
        validate_component_action(sl2, bad)
