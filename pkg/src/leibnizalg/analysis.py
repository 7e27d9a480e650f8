"""Classification predicates and decomposition analysis for semisimple
Leibniz algebras presented with a Levi layout.

The layout names the simple Lie components S_1..S_k and the right-annihilated
ideal I of a table; everything here is phrased in terms of the component
ideals I_j = [I, S_j]: their sum, idealness, pairwise intersections, and the
resulting direct-sum decompositions into simple or Lie-simple summands.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .algebra import (
    AlgebraTable,
    bracket,
    induced_table,
    is_ideal,
    is_leibniz,
    quotient,
    require_leibniz,
    same_products,
    squares_ideal,
    subspace_product,
)
from .builders import LeviComponent, LeviLayout, sl2_table
from .errors import (
    LayoutError,
    NotSemisimpleError,
    UndecidableIrreducibility,
)
from .lie import is_semisimple_lie, is_simple_lie
from .linalg import Matrix, Subspace, unit_vec
from .modules import ComponentAction, ModuleAction, decompose_sl2, is_irreducible_sl2

SL2_PERMS = [
    (0, 1, 2), (0, 2, 1), (1, 0, 2), (1, 2, 0), (2, 0, 1), (2, 1, 0),
]


def find_sl2_roles(table: AlgebraTable) -> tuple[int, int, int] | None:
    """Positions (e, f, h) in a 3-dim table matching the canonical split
    relations exactly, if any basis permutation does."""
    if table.dim != 3:
        return None
    for roles in SL2_PERMS:
        e, f, h = roles
        ref = sl2_table()
        ok = True
        for i in range(3):
            for j in range(3):
                src = {roles[k]: c for k, c in ref.products[i][j]}
                got = {k: c for k, c in table.products[roles[i]][roles[j]]}
                if src != got:
                    ok = False
                    break
            if not ok:
                break
        if ok:
            return roles
    return None


def is_semisimple_leibniz(table: AlgebraTable) -> bool:
    """Radical equals the squares ideal, tested through the quotient:
    the quotient Lie algebra must be semisimple."""
    require_leibniz(table)
    q = quotient(table, squares_ideal(table))
    return is_semisimple_lie(q.table)


def is_lie_simple(table: AlgebraTable) -> bool:
    """The quotient by the squares ideal is a simple Lie algebra."""
    require_leibniz(table)
    q = quotient(table, squares_ideal(table))
    return is_simple_lie(q.table)


def quotient_action_on_ideal(table: AlgebraTable) -> ModuleAction | None:
    """Right action of the quotient (when it is a recognizable sl2) on the
    squares ideal, or None when no canonical sl2 basis is found."""
    ideal = squares_ideal(table)
    q = quotient(table, ideal)
    if q.table.dim != 3:
        return None
    roles = find_sl2_roles(q.table)
    if roles is None:
        return None
    n = table.dim
    reps = [unit_vec(n, i) for i in q.representatives]
    mats = []
    for rep in reps:
        rows = [ideal.coordinates(bracket(table, w, rep)) for w in ideal.basis]
        mats.append(Matrix.from_rows(rows, ideal.dim) if ideal.dim else Matrix.zero(0, 0))
    comp = ComponentAction("quotient", tuple(mats), roles)
    return ModuleAction(ideal.dim, (comp,))


def is_simple_leibniz(
    table: AlgebraTable, declared_irreducible: bool | None = None
) -> bool:
    """Only ideals {0}, I, L with [L, L] != I: the quotient must be simple Lie
    and I irreducible as a right module over it.

    A Lie input (I = 0) degenerates to simplicity of the Lie algebra itself.
    """
    require_leibniz(table)
    ideal = squares_ideal(table)
    if ideal.dim == 0:
        return is_simple_lie(table)
    if not is_lie_simple(table):
        return False
    full = table.full_space()
    if subspace_product(table, full, full) == ideal:
        return False
    action = quotient_action_on_ideal(table)
    if action is not None:
        return is_irreducible_sl2(action, "quotient")
    if declared_irreducible is not None:
        return declared_irreducible
    raise UndecidableIrreducibility(
        "quotient is not a recognizable sl2 and no irreducibility attribute was declared"
    )


def verify_layout(table: AlgebraTable, layout: LeviLayout, require_squares: bool = True) -> None:
    """Check a layout against its table; raises LayoutError on inconsistency."""
    n = table.dim
    if layout.ambient != n:
        raise LayoutError("layout ambient dimension differs from table")
    total = Subspace.zero(n)
    for comp in layout.components:
        induced = induced_table(table, comp.basis_vectors)
        if not same_products(induced, comp.table):
            raise LayoutError(f"component {comp.label!r} is not the stated subalgebra")
        if not total.intersect(comp.subspace).is_zero():
            raise LayoutError(f"component {comp.label!r} overlaps earlier components")
        total = total + comp.subspace
    ideal = layout.ideal
    if not total.intersect(ideal).is_zero():
        raise LayoutError("ideal overlaps the Levi components")
    if (total + ideal).dim != n:
        raise LayoutError("components and ideal do not span the algebra")
    if not is_ideal(table, ideal):
        raise LayoutError("stated ideal is not an ideal")
    if not subspace_product(table, table.full_space(), ideal).is_zero():
        raise LayoutError("stated ideal is not right-annihilated")
    if require_squares and ideal != squares_ideal(table):
        raise LayoutError("stated ideal differs from the span of squares")


def action_on_subspace(
    table: AlgebraTable, sub: Subspace, components: list[LeviComponent]
) -> ModuleAction:
    """Right action of the named components on an invariant subspace, in the
    subspace's RREF coordinates."""
    comps = []
    for comp in components:
        mats = []
        for b in comp.basis_vectors:
            rows = []
            for w in sub.basis:
                img = bracket(table, w, b)
                if not sub.contains(img):
                    raise LayoutError(
                        f"subspace is not invariant under component {comp.label!r}"
                    )
                rows.append(sub.coordinates(img))
            mats.append(Matrix.from_rows(rows, sub.dim) if sub.dim else Matrix.zero(0, 0))
        comps.append(ComponentAction(comp.label, tuple(mats), comp.sl2_roles))
    return ModuleAction(sub.dim, tuple(comps))


@dataclass(frozen=True)
class ComponentIdeals:
    labels: tuple[str, ...]
    ideals: tuple[Subspace, ...]
    sum_is_ideal: bool                    # sum of the I_j equals I
    each_is_ideal: tuple[bool, ...]       # every I_j is a two-sided ideal
    self_regenerating: tuple[bool, ...]   # [I_j, S_j] = I_j
    summand_is_ideal: tuple[bool, ...]    # every S_j + I_j is a two-sided ideal

    def ideal_for(self, label: str) -> Subspace:
        return self.ideals[self.labels.index(label)]

    def all_clauses_hold(self) -> bool:
        return (
            self.sum_is_ideal
            and all(self.each_is_ideal)
            and all(self.self_regenerating)
            and all(self.summand_is_ideal)
        )


def component_ideals(table: AlgebraTable, layout: LeviLayout) -> ComponentIdeals:
    """I_j = [I, S_j] with the four structural clauses evaluated exactly."""
    verify_layout(table, layout)
    ideal = layout.ideal
    labels = tuple(c.label for c in layout.components)
    ideals = tuple(
        subspace_product(table, ideal, c.subspace) for c in layout.components
    )
    total = Subspace.zero(table.dim)
    for ij in ideals:
        total = total + ij
    each = tuple(is_ideal(table, ij) for ij in ideals)
    regen = tuple(
        subspace_product(table, ij, c.subspace) == ij
        for ij, c in zip(ideals, layout.components)
    )
    summand = tuple(
        is_ideal(table, c.subspace + ij) for ij, c in zip(ideals, layout.components)
    )
    return ComponentIdeals(labels, ideals, total == ideal, each, regen, summand)


@dataclass(frozen=True)
class AnnihilationReport:
    """Executable form of: an ideal irreducible over one sl2 component is
    annihilated by every other component."""

    hypothesis_met: bool
    reason: str
    passed: bool | None
    witness: Subspace | None


def check_irreducible_annihilation(
    table: AlgebraTable, layout: LeviLayout, sl2_label: str
) -> AnnihilationReport:
    verify_layout(table, layout, require_squares=False)
    comp = layout.component(sl2_label)
    if not comp.is_sl2:
        raise LayoutError(f"component {sl2_label!r} is not an sl2 component")
    if not is_semisimple_leibniz(table):
        return AnnihilationReport(False, "algebra is not semisimple", None, None)
    ideal = layout.ideal
    if ideal.dim == 0:
        return AnnihilationReport(False, "ideal is zero", None, None)
    action = action_on_subspace(table, ideal, [comp])
    if not is_irreducible_sl2(action, sl2_label):
        return AnnihilationReport(
            False, f"ideal is reducible over {sl2_label!r}", None, None
        )
    others = Subspace.zero(table.dim)
    for c in layout.components:
        if c.label != sl2_label:
            others = others + c.subspace
    product = subspace_product(table, ideal, others)
    if product.is_zero():
        return AnnihilationReport(True, "", True, None)
    return AnnihilationReport(True, "", False, product)


@dataclass(frozen=True)
class Summand:
    label: str
    component_subspace: Subspace
    module_subspace: Subspace
    subspace: Subspace
    classification: str  # "simple" | "lie-simple"
    irreducible: bool | None


@dataclass(frozen=True)
class DecompositionReport:
    status: str  # "decomposed" | "not-decomposable"
    summands: tuple[Summand, ...]
    witness: tuple[str, str, Subspace] | None
    verified: bool


def decompose_semisimple(table: AlgebraTable, layout: LeviLayout) -> DecompositionReport:
    """Split into pairwise-annihilating ideals S_j + I_j, or report the first
    nonzero intersection I_p with I_q as a witness of indecomposability."""
    if not is_semisimple_leibniz(table):
        raise NotSemisimpleError("decomposition requires a semisimple algebra")
    ci = component_ideals(table, layout)
    k = len(ci.ideals)
    for p in range(k):
        for q in range(p + 1, k):
            inter = ci.ideals[p].intersect(ci.ideals[q])
            if not inter.is_zero():
                return DecompositionReport(
                    "not-decomposable", (), (ci.labels[p], ci.labels[q], inter), True
                )
    summands = []
    total = Subspace.zero(table.dim)
    verified = True
    for comp, ij in zip(layout.components, ci.ideals):
        sub = comp.subspace + ij
        total = total + sub
        if not is_ideal(table, sub):
            verified = False
        irreducible: bool | None
        if ij.dim == 0:
            irreducible = True
        elif comp.is_sl2:
            action = action_on_subspace(table, ij, [comp])
            irreducible = is_irreducible_sl2(action, comp.label)
        else:
            irreducible = layout.irreducible_declared(comp.label)
        classification = "simple" if irreducible else "lie-simple"
        summands.append(
            Summand(comp.label, comp.subspace, ij, sub, classification, irreducible)
        )
    if total.dim != table.dim:
        verified = False
    for p in range(k):
        for q in range(k):
            if p != q and not subspace_product(
                table, summands[p].subspace, summands[q].subspace
            ).is_zero():
                verified = False
    return DecompositionReport("decomposed", tuple(summands), None, verified)


def summand_table(table: AlgebraTable, summand: Summand) -> AlgebraTable:
    """Induced table of one decomposition summand (for classification checks)."""
    return induced_table(table, summand.subspace.basis)


@dataclass(frozen=True)
class DistinctDimsReport:
    """Executable form of: pairwise-distinct chain dimensions over every sl2
    component force a direct-sum decomposition."""

    hypothesis_met: bool
    reason: str
    chain_dims: tuple[tuple[str, tuple[int, ...]], ...]
    decomposition: DecompositionReport | None
    conclusion_holds: bool | None


def check_distinct_dims_split(table: AlgebraTable, layout: LeviLayout) -> DistinctDimsReport:
    verify_layout(table, layout, require_squares=False)
    for comp in layout.components[:-1]:
        if not comp.is_sl2:
            raise LayoutError("all components but the last must be sl2 copies")
    if not is_semisimple_leibniz(table):
        return DistinctDimsReport(False, "algebra is not semisimple", (), None, None)
    ideal = squares_ideal(table)
    dims_per_comp = []
    hypothesis = True
    reason = ""
    heads = layout.components[:-1] if len(layout.components) > 1 else layout.components
    for comp in heads:
        if not comp.is_sl2:
            continue
        ij = subspace_product(table, ideal, comp.subspace)
        if ij.dim == 0:
            dims_per_comp.append((comp.label, ()))
            continue
        action = action_on_subspace(table, ij, [comp])
        dec = decompose_sl2(action, comp.label)
        dims = tuple(c.dim for c in dec.chains)
        dims_per_comp.append((comp.label, dims))
        if len(set(dims)) != len(dims):
            hypothesis = False
            reason = f"repeated chain dimension over {comp.label!r}"
    if not hypothesis:
        return DistinctDimsReport(False, reason, tuple(dims_per_comp), None, None)
    report = decompose_semisimple(table, layout)
    holds = report.status == "decomposed" and len(report.summands) == len(layout.components)
    return DistinctDimsReport(True, "", tuple(dims_per_comp), report, holds)


@dataclass(frozen=True)
class IsotypicSlices:
    hypothesis_met: bool
    reason: str
    equal_dim: int | None
    multiplicity: int | None
    slices: tuple[Subspace, ...]
    slices_are_submodules: bool | None
    sum_equals_intersection: bool | None
    intersection: Subspace | None


def isotypic_slices(
    table: AlgebraTable,
    layout: LeviLayout,
    sl2_label: str | None = None,
    equal_dim: int | None = None,
) -> IsotypicSlices:
    """Position slices across the equal-dimension chains of I_1 = [I, sl2].

    Slice p spans the p-th vector of each of the s chains of the given
    dimension; each slice is checked to be invariant under the remaining
    components and the slice sum is compared with I_1 intersect I_2.
    """
    verify_layout(table, layout, require_squares=False)
    if len(layout.components) < 2:
        raise LayoutError("need an sl2 component and at least one other component")
    comp = layout.component(sl2_label) if sl2_label else layout.components[0]
    if not comp.is_sl2:
        raise LayoutError(f"component {comp.label!r} is not an sl2 component")
    others = [c for c in layout.components if c.label != comp.label]
    ideal = layout.ideal
    i1 = subspace_product(table, ideal, comp.subspace)
    others_span = Subspace.zero(table.dim)
    for c in others:
        others_span = others_span + c.subspace
    i2 = subspace_product(table, ideal, others_span)
    if i1.dim == 0:
        return IsotypicSlices(False, "I_1 is zero", None, None, (), None, None, None)
    action = action_on_subspace(table, i1, [comp])
    dec = decompose_sl2(action, comp.label)
    dims = [c.dim for c in dec.chains]
    if equal_dim is None:
        repeated = sorted({d for d in dims if dims.count(d) >= 2})
        if not repeated:
            return IsotypicSlices(
                False, "no repeated chain dimension", None, None, (), None, None, None
            )
        if len(repeated) > 1:
            return IsotypicSlices(
                False,
                "several repeated chain dimensions; pass equal_dim explicitly",
                None, None, (), None, None, None,
            )
        equal_dim = repeated[0]
    selected = [c for c in dec.chains if c.dim == equal_dim]
    if not selected:
        return IsotypicSlices(
            False, f"no chain of dimension {equal_dim}", equal_dim, None, (), None, None, None
        )
    s = len(selected)
    # chain vectors live in I_1 coordinates; lift them back to the ambient space
    def lift(v):
        out = [Fraction(0)] * table.dim
        for c, b in zip(v, i1.basis):
            if c:
                for i, x in enumerate(b):
                    out[i] += c * x
        return tuple(out)

    slices = []
    for p in range(equal_dim):
        slices.append(
            Subspace.span(table.dim, [lift(c.vectors[p]) for c in selected])
        )
    submodules = True
    for sl in slices:
        for c in others:
            for b in c.basis_vectors:
                for w in sl.basis:
                    if not sl.contains(bracket(table, w, b)):
                        submodules = False
    total = Subspace.zero(table.dim)
    for sl in slices:
        total = total + sl
    inter = i1.intersect(i2)
    return IsotypicSlices(
        True, "", equal_dim, s, tuple(slices), submodules, total == inter, inter
    )
