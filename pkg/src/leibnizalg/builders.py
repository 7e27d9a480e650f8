"""Deterministic constructors for the fixture algebras and the general
semisimple recipe (direct sum of simple Lie components) acting on a
right-annihilated module ideal.

Basis ordering convention: Levi components first, in recipe order, each in its
own internal basis order; module vectors afterwards, in recipe order.  The
ten-dimensional shared-module fixture keeps its traditional basis order
(e1, h1, f1, e2, h2, f2, x1..x4).
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import reduce

from .algebra import AlgebraTable, direct_sum, hemisemidirect
from .errors import LayoutError
from .lie import is_simple_lie
from .linalg import Matrix, Subspace, Vector, unit_vec
from .modules import (
    ComponentAction,
    ModuleAction,
    canonical_module,
    direct_sum_modules,
    tensor_pair_module,
    trivial_module,
    validate_commutation,
    validate_component_action,
)

SL2_ORDER_EFH = ("e", "f", "h")
SL2_ORDER_EHF = ("e", "h", "f")


def sl2_table(order: tuple[str, str, str] = SL2_ORDER_EFH, labels=None) -> AlgebraTable:
    """Canonical split 3-dimensional simple Lie table in the given basis order.

    `order` is a permutation of ("e", "f", "h"); `labels` defaults to it.
    """
    idx = {name: i for i, name in enumerate(order)}
    if set(idx) != {"e", "f", "h"}:
        raise ValueError("order must be a permutation of e, f, h")
    e, f, h = idx["e"], idx["f"], idx["h"]
    prods = {
        (e, h): {e: 2},
        (h, e): {e: -2},
        (f, h): {f: -2},
        (h, f): {f: 2},
        (e, f): {h: 1},
        (f, e): {h: -1},
    }
    return AlgebraTable.from_products(3, prods, labels or order)


def sl2_roles_of(order: tuple[str, str, str]) -> tuple[int, int, int]:
    idx = {name: i for i, name in enumerate(order)}
    return (idx["e"], idx["f"], idx["h"])


def build_sl2() -> AlgebraTable:
    return sl2_table()


@dataclass(frozen=True)
class ComponentSpec:
    """One Levi component of a semisimple recipe."""

    label: str
    table: AlgebraTable
    sl2_roles: tuple[int, int, int] | None = None

    @staticmethod
    def sl2(label: str, order: tuple[str, str, str] = SL2_ORDER_EFH, labels=None) -> "ComponentSpec":
        return ComponentSpec(label, sl2_table(order, labels), sl2_roles_of(order))


@dataclass(frozen=True)
class SemisimpleSpec:
    components: tuple[ComponentSpec, ...]
    modules: tuple[ModuleAction, ...]


@dataclass(frozen=True)
class LeviComponent:
    """A Levi component located inside a built algebra."""

    label: str
    table: AlgebraTable
    basis_vectors: tuple[Vector, ...]
    sl2_roles: tuple[int, int, int] | None

    @property
    def subspace(self) -> Subspace:
        return Subspace.span(len(self.basis_vectors[0]), self.basis_vectors)

    @property
    def is_sl2(self) -> bool:
        return self.sl2_roles is not None


@dataclass(frozen=True)
class LeviLayout:
    components: tuple[LeviComponent, ...]
    ideal_basis: tuple[Vector, ...]
    declared_irreducible: tuple[tuple[str, bool], ...] = ()

    @property
    def ambient(self) -> int:
        if self.components:
            return len(self.components[0].basis_vectors[0])
        if self.ideal_basis:
            return len(self.ideal_basis[0])
        return 0

    @property
    def ideal(self) -> Subspace:
        return Subspace.span(self.ambient, self.ideal_basis)

    def component(self, label: str) -> LeviComponent:
        for c in self.components:
            if c.label == label:
                return c
        raise KeyError(f"no component labeled {label!r}")

    def component_subspaces(self) -> tuple[Subspace, ...]:
        return tuple(c.subspace for c in self.components)

    def irreducible_declared(self, label: str) -> bool | None:
        for lab, val in self.declared_irreducible:
            if lab == label:
                return val
        return None


@dataclass(frozen=True)
class BuiltAlgebra:
    table: AlgebraTable
    layout: LeviLayout


def _extend_trivially(action: ModuleAction, spec: SemisimpleSpec) -> ModuleAction:
    """Add zero action matrices for recipe components the module does not name."""
    have = {c.label for c in action.components}
    comps = list(action.components)
    for cs in spec.components:
        if cs.label not in have:
            z = Matrix.zero(action.dim, action.dim)
            comps.append(ComponentAction(cs.label, (z,) * cs.table.dim, cs.sl2_roles))
    order = [cs.label for cs in spec.components]
    comps.sort(key=lambda c: order.index(c.label))
    return ModuleAction(action.dim, tuple(comps))


def build_semisimple(
    spec: SemisimpleSpec,
    module_labels=None,
    declared_irreducible: tuple[tuple[str, bool], ...] = (),
) -> BuiltAlgebra:
    """(direct sum of components) acting on (direct sum of modules) by the rule
    [x + m, y + n] = [x, y] + m . y."""
    labels_seen = set()
    for cs in spec.components:
        if cs.label in labels_seen:
            raise LayoutError(f"duplicate component label {cs.label!r}")
        labels_seen.add(cs.label)
        if not is_simple_lie(cs.table):
            raise LayoutError(f"component {cs.label!r} is not a simple Lie table")
    extended = [_extend_trivially(m, spec) for m in spec.modules]
    for act in extended:
        for cs, comp in zip(spec.components, act.components):
            if comp.label != cs.label:
                raise LayoutError("component order mismatch after extension")
            validate_component_action(cs.table, comp)
        validate_commutation(act)
    combined = direct_sum_modules(extended) if extended else ModuleAction(0, ())
    lie_part = reduce(direct_sum, (cs.table for cs in spec.components))
    flat_mats: list[Matrix] = []
    for idx, cs in enumerate(spec.components):
        if combined.components:
            mats = combined.components[idx].matrices
        else:
            mats = (Matrix.zero(0, 0),) * cs.table.dim
        flat_mats.extend(mats)
    table = hemisemidirect(lie_part, flat_mats, module_labels)
    n = table.dim
    offset = 0
    comps = []
    for cs in spec.components:
        vecs = tuple(unit_vec(n, offset + i) for i in range(cs.table.dim))
        comps.append(LeviComponent(cs.label, cs.table, vecs, cs.sl2_roles))
        offset += cs.table.dim
    ideal_vecs = tuple(unit_vec(n, offset + a) for a in range(combined.dim))
    layout = LeviLayout(tuple(comps), ideal_vecs, declared_irreducible)
    return BuiltAlgebra(table, layout)


def build_simple_leibniz(m: int) -> BuiltAlgebra:
    """sl2 acting on one irreducible chain of highest weight m; dimension m + 4."""
    spec = SemisimpleSpec(
        (ComponentSpec.sl2("sl2"),),
        (canonical_module(m, "sl2"),),
    )
    labels = tuple(f"x{k}" for k in range(m + 1))
    return build_semisimple(spec, labels, declared_irreducible=(("sl2", True),))


def build_lie_simple(ts: list[int]) -> BuiltAlgebra:
    """sl2 acting on a direct sum of chains with highest weights `ts`."""
    if not ts:
        raise ValueError("need at least one summand")
    spec = SemisimpleSpec(
        (ComponentSpec.sl2("sl2"),),
        tuple(canonical_module(t, "sl2") for t in ts),
    )
    labels = tuple(f"x{k}^{j + 1}" for j, t in enumerate(ts) for k in range(t + 1))
    irreducible = len(ts) == 1
    return build_semisimple(spec, labels, declared_irreducible=(("sl2", irreducible),))


def build_example2(t1: int, t2: int, t3: int, t4: int) -> BuiltAlgebra:
    """Two sl2 copies, each acting on two chains of its own; the cross action
    vanishes.  Dimension 6 + sum(t_i + 1)."""
    c1 = ComponentSpec.sl2("sl2^1", labels=("e1", "f1", "h1"))
    c2 = ComponentSpec.sl2("sl2^2", labels=("e2", "f2", "h2"))
    m1 = direct_sum_modules([canonical_module(t1, "sl2^1"), canonical_module(t2, "sl2^1")])
    m2 = direct_sum_modules([canonical_module(t3, "sl2^2"), canonical_module(t4, "sl2^2")])
    spec = SemisimpleSpec((c1, c2), (m1, m2))
    labels = tuple(
        f"x{k}^{j + 1}" for j, t in enumerate((t1, t2, t3, t4)) for k in range(t + 1)
    )
    return build_semisimple(spec, labels)


def _reorder_component(comp: ComponentAction, perm: tuple[int, ...], roles) -> ComponentAction:
    return ComponentAction(comp.label, tuple(comp.matrices[p] for p in perm), roles)


def align_component_roles(comp: ComponentAction, roles: tuple[int, int, int]) -> ComponentAction:
    """Rearrange an sl2 component's matrices so (e, f, h) sit at `roles`."""
    mats: list[Matrix | None] = [None, None, None]
    mats[roles[0]] = comp.e
    mats[roles[1]] = comp.f
    mats[roles[2]] = comp.h
    return ComponentAction(comp.label, tuple(mats), roles)


def align_module(action: ModuleAction, roles_by_label: dict[str, tuple[int, int, int]]) -> ModuleAction:
    """Align every named sl2 component of a module with the given role layout."""
    comps = tuple(
        align_component_roles(c, roles_by_label[c.label])
        if c.label in roles_by_label and c.sl2_roles is not None
        else c
        for c in action.components
    )
    return ModuleAction(action.dim, comps)


def build_example3() -> BuiltAlgebra:
    """The 10-dimensional algebra with one 4-dimensional module shared between
    two sl2 copies; basis (e1, h1, f1, e2, h2, f2, x1, x2, x3, x4)."""
    c1 = ComponentSpec.sl2("sl2^1", SL2_ORDER_EHF, labels=("e1", "h1", "f1"))
    c2 = ComponentSpec.sl2("sl2^2", SL2_ORDER_EHF, labels=("e2", "h2", "f2"))
    shared = tensor_pair_module(1, 1, ("sl2^1", "sl2^2"))
    # reorder each component's matrices (E, F, H) -> (E, H, F) to match the tables
    comps = tuple(
        _reorder_component(c, (0, 2, 1), (0, 2, 1)) for c in shared.components
    )
    shared = ModuleAction(shared.dim, comps)
    spec = SemisimpleSpec((c1, c2), (shared,))
    labels = ("x1", "x2", "x3", "x4")
    return build_semisimple(spec, labels)


def build_hemisemidirect_example(m: int) -> BuiltAlgebra:
    """The basic simple construction: a simple Lie algebra with an irreducible
    right-annihilated module; here the split sl2 instance."""
    return build_simple_leibniz(m)
