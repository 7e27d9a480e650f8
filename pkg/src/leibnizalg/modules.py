"""Right-module theory over sl2 and direct sums of simple components.

Actions use the row-vector convention v . a = v @ A_a, so the right-module
axiom reads A_[a,b] = A_a A_b - A_b A_a.  The normalization of irreducible
chains is fixed by the tables used throughout the package: F raises the chain
index with coefficient 1, E lowers it with coefficient -k(m + 1 - k), and H is
diagonal with weights m - 2k.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .algebra import AlgebraTable
from .errors import ModuleAxiomError, NotSemisimpleAction
from .linalg import Matrix, Subspace, Vector, is_zero_vec, kernel


@dataclass(frozen=True)
class ComponentAction:
    """Action matrices of one Levi component, ordered like its table basis.

    For sl2 components `sl2_roles` gives the positions of (e, f, h) in
    `matrices`; non-sl2 components leave it as None.
    """

    label: str
    matrices: tuple[Matrix, ...]
    sl2_roles: tuple[int, int, int] | None = None

    @property
    def e(self) -> Matrix:
        return self.matrices[self._roles()[0]]

    @property
    def f(self) -> Matrix:
        return self.matrices[self._roles()[1]]

    @property
    def h(self) -> Matrix:
        return self.matrices[self._roles()[2]]

    def _roles(self) -> tuple[int, int, int]:
        if self.sl2_roles is None:
            raise NotSemisimpleAction(f"component {self.label!r} is not an sl2 action")
        return self.sl2_roles


@dataclass(frozen=True)
class ModuleAction:
    dim: int
    components: tuple[ComponentAction, ...]

    def component(self, label: str) -> ComponentAction:
        for c in self.components:
            if c.label == label:
                return c
        raise KeyError(f"no component labeled {label!r}")

    def labels(self) -> tuple[str, ...]:
        return tuple(c.label for c in self.components)


@dataclass(frozen=True)
class IrreducibleChain:
    highest_weight: int
    vectors: tuple[Vector, ...]

    @property
    def dim(self) -> int:
        return len(self.vectors)

    def span(self, ambient: int) -> Subspace:
        return Subspace.span(ambient, self.vectors)


@dataclass(frozen=True)
class ModuleDecomposition:
    chains: tuple[IrreducibleChain, ...]
    multiplicities: dict[int, int]


def canonical_module(m: int, label: str = "sl2") -> ModuleAction:
    """(m+1)-dimensional irreducible chain module x_0, ..., x_m."""
    if m < 0:
        raise ValueError("highest weight must be nonnegative")
    d = m + 1
    e = [[Fraction(0)] * d for _ in range(d)]
    f = [[Fraction(0)] * d for _ in range(d)]
    h = [[Fraction(0)] * d for _ in range(d)]
    for k in range(d):
        h[k][k] = Fraction(m - 2 * k)
        if k < m:
            f[k][k + 1] = Fraction(1)
        if k >= 1:
            e[k][k - 1] = Fraction(-k * (m + 1 - k))
    mk = lambda rows: Matrix.from_rows(rows, d) if d else Matrix.zero(0, 0)
    comp = ComponentAction(label, (mk(e), mk(f), mk(h)), (0, 1, 2))
    return ModuleAction(d, (comp,))


def trivial_module(d: int, label: str = "sl2") -> ModuleAction:
    z = Matrix.zero(d, d)
    return ModuleAction(d, (ComponentAction(label, (z, z, z), (0, 1, 2)),))


def tensor_pair_module(
    ma: int, mb: int, labels: tuple[str, str] = ("A", "B")
) -> ModuleAction:
    """(ma+1)(mb+1)-dimensional module: component A acts canonically on the
    first index, component B on the second; the two actions commute.

    Basis order: index (a, b) sits at position b * (ma + 1) + a.
    """
    if ma < 0 or mb < 0:
        raise ValueError("highest weights must be nonnegative")
    da, db = ma + 1, mb + 1
    d = da * db
    pos = lambda a, b: b * da + a

    def lift_a(small: Matrix) -> Matrix:
        rows = [[Fraction(0)] * d for _ in range(d)]
        for a in range(da):
            for a2 in range(da):
                c = small.entry(a, a2)
                if c:
                    for b in range(db):
                        rows[pos(a, b)][pos(a2, b)] = c
        return Matrix.from_rows(rows, d)

    def lift_b(small: Matrix) -> Matrix:
        rows = [[Fraction(0)] * d for _ in range(d)]
        for b in range(db):
            for b2 in range(db):
                c = small.entry(b, b2)
                if c:
                    for a in range(da):
                        rows[pos(a, b)][pos(a, b2)] = c
        return Matrix.from_rows(rows, d)

    ca = canonical_module(ma, labels[0]).components[0]
    cb = canonical_module(mb, labels[1]).components[0]
    comp_a = ComponentAction(labels[0], tuple(lift_a(x) for x in ca.matrices), (0, 1, 2))
    comp_b = ComponentAction(labels[1], tuple(lift_b(x) for x in cb.matrices), (0, 1, 2))
    return ModuleAction(d, (comp_a, comp_b))


def direct_sum_modules(actions: list[ModuleAction]) -> ModuleAction:
    """Block-diagonal sum; all summands must share the same component labels."""
    if not actions:
        return ModuleAction(0, ())
    labels = actions[0].labels()
    for act in actions[1:]:
        if act.labels() != labels:
            raise ModuleAxiomError("component label sets differ between summands")
    total = sum(a.dim for a in actions)
    comps = []
    for pos_c, label in enumerate(labels):
        counts = [len(a.components[pos_c].matrices) for a in actions]
        if len(set(counts)) != 1:
            raise ModuleAxiomError("component arities differ between summands")
        mats = []
        for t in range(counts[0]):
            rows = [[Fraction(0)] * total for _ in range(total)]
            off = 0
            for act in actions:
                small = act.components[pos_c].matrices[t]
                for i in range(act.dim):
                    for j in range(act.dim):
                        c = small.entry(i, j)
                        if c:
                            rows[off + i][off + j] = c
                off += act.dim
            mats.append(Matrix.from_rows(rows, total) if total else Matrix.zero(0, 0))
        roles = actions[0].components[pos_c].sl2_roles
        comps.append(ComponentAction(label, tuple(mats), roles))
    return ModuleAction(total, tuple(comps))


def validate_component_action(table: AlgebraTable, comp: ComponentAction) -> None:
    """Right-module axiom of `comp` against its component table."""
    g = table.dim
    if len(comp.matrices) != g:
        raise ModuleAxiomError(
            f"component {comp.label!r}: expected {g} action matrices"
        )
    d = comp.matrices[0].nrows if comp.matrices else 0
    for i in range(g):
        for j in range(g):
            expected = Matrix.zero(d, d)
            for k, c in table.products[i][j]:
                expected = expected + comp.matrices[k].scale(c)
            got = comp.matrices[i] @ comp.matrices[j] - comp.matrices[j] @ comp.matrices[i]
            if got != expected:
                raise ModuleAxiomError(
                    f"component {comp.label!r}: module axiom fails on pair ({i}, {j})"
                )


def validate_commutation(action: ModuleAction) -> None:
    """Action matrices of distinct components must commute pairwise."""
    for a in range(len(action.components)):
        for b in range(a + 1, len(action.components)):
            ca, cb = action.components[a], action.components[b]
            for x in ca.matrices:
                for y in cb.matrices:
                    if x @ y != y @ x:
                        raise ModuleAxiomError(
                            f"components {ca.label!r} and {cb.label!r} do not commute"
                        )


def _left_eigenspace(mtx: Matrix, lam: Fraction) -> Subspace:
    """{v : v M = lam v} for the row-vector action."""
    d = mtx.nrows
    shifted = mtx - Matrix.identity(d).scale(lam)
    return kernel(shifted.transpose())


def weight_spaces(action: ModuleAction, component: str) -> dict[int, Subspace]:
    """Integer eigenspaces of the H action; must fill the whole module."""
    comp = action.component(component)
    d = action.dim
    if d == 0:
        return {}
    out: dict[int, Subspace] = {}
    total = 0
    for lam in range(-d, d + 1):
        ws = _left_eigenspace(comp.h, Fraction(lam))
        if not ws.is_zero():
            out[lam] = ws
            total += ws.dim
    if total != d:
        raise NotSemisimpleAction(
            f"H eigenspaces over component {component!r} fill only {total} of {d} dimensions"
        )
    return out


def highest_weight_vectors(action: ModuleAction, component: str) -> Subspace:
    """Kernel of the E action (row-vector convention)."""
    comp = action.component(component)
    if action.dim == 0:
        return Subspace.zero(0)
    return kernel(comp.e.transpose())


def decompose_sl2(action: ModuleAction, component: str) -> ModuleDecomposition:
    """Split into irreducible chains: each highest-weight vector v of weight m
    generates the chain v, vF, ..., vF^m."""
    comp = action.component(component)
    d = action.dim
    if d == 0:
        return ModuleDecomposition((), {})
    spaces = weight_spaces(action, component)
    hw = highest_weight_vectors(action, component)
    chains: list[IrreducibleChain] = []
    covered = 0
    for lam in sorted(spaces, reverse=True):
        hw_here = hw.intersect(spaces[lam])
        if hw_here.is_zero():
            continue
        if lam < 0:
            raise NotSemisimpleAction(
                f"highest-weight vector of negative weight {lam} over {component!r}"
            )
        for v in hw_here.basis:
            vecs = [v]
            for _ in range(lam):
                vecs.append(comp.f.vec_mat(vecs[-1]))
            chain = IrreducibleChain(lam, tuple(vecs))
            _check_chain(comp, chain)
            chains.append(chain)
            covered += lam + 1
    if covered != d:
        raise NotSemisimpleAction(
            f"chains cover {covered} of {d} dimensions over {component!r}"
        )
    stacked = Subspace.span(d, [v for c in chains for v in c.vectors])
    if stacked.dim != d:
        raise NotSemisimpleAction("chain vectors are not a basis")
    mult: dict[int, int] = {}
    for c in chains:
        mult[c.highest_weight] = mult.get(c.highest_weight, 0) + 1
    return ModuleDecomposition(tuple(chains), mult)


def _check_chain(comp: ComponentAction, chain: IrreducibleChain) -> None:
    m = chain.highest_weight
    xs = chain.vectors
    for k, x in enumerate(xs):
        if comp.h.vec_mat(x) != tuple(Fraction(m - 2 * k) * c for c in x):
            raise NotSemisimpleAction("chain H relation fails")
        fx = comp.f.vec_mat(x)
        if k < m:
            if fx != xs[k + 1]:
                raise NotSemisimpleAction("chain F relation fails")
        elif not is_zero_vec(fx):
            raise NotSemisimpleAction("chain does not terminate under F")
        ex = comp.e.vec_mat(x)
        if k == 0:
            if not is_zero_vec(ex):
                raise NotSemisimpleAction("chain head is not annihilated by E")
        else:
            coeff = Fraction(-k * (m + 1 - k))
            if ex != tuple(coeff * c for c in xs[k - 1]):
                raise NotSemisimpleAction("chain E relation fails")


def is_irreducible_sl2(action: ModuleAction, component: str) -> bool:
    """True iff the module is nonzero and a single chain."""
    return len(decompose_sl2(action, component).chains) == 1


def rebuild_from_chain(chain: IrreducibleChain, label: str = "sl2") -> ModuleAction:
    """Canonical action matrices of one chain, for round-trip checks."""
    return canonical_module(chain.highest_weight, label)
