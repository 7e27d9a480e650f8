"""Exact-arithmetic toolkit for finite-dimensional right Leibniz algebras
presented by structure constants: construction, classification (Lie, solvable,
simple, Lie-simple, semisimple), sl2-module decomposition of the
right-annihilated ideal, and direct-sum decomposition into simple and
Lie-simple summands.

All computations are over the rationals with no floating point anywhere.
"""

from .algebra import (
    AlgebraTable,
    DerivedSeries,
    Quotient,
    bracket,
    derived_series,
    direct_sum,
    hemisemidirect,
    induced_table,
    is_ideal,
    is_leibniz,
    is_lie,
    leibniz_witness,
    left_annihilator,
    quotient,
    right_annihilator,
    same_products,
    squares_ideal,
    subspace_product,
)
from .analysis import (
    AnnihilationReport,
    ComponentIdeals,
    DecompositionReport,
    DistinctDimsReport,
    IsotypicSlices,
    Summand,
    action_on_subspace,
    check_distinct_dims_split,
    check_irreducible_annihilation,
    component_ideals,
    decompose_semisimple,
    find_sl2_roles,
    is_lie_simple,
    is_semisimple_leibniz,
    is_simple_leibniz,
    isotypic_slices,
    quotient_action_on_ideal,
    summand_table,
    verify_layout,
)
from .builders import (
    BuiltAlgebra,
    ComponentSpec,
    LeviComponent,
    LeviLayout,
    SemisimpleSpec,
    build_example2,
    build_example3,
    build_lie_simple,
    build_semisimple,
    build_simple_leibniz,
    build_sl2,
    sl2_table,
)
from .errors import (
    DimensionMismatch,
    LayoutError,
    LeibnizError,
    ModuleAxiomError,
    NonSplitUnsupported,
    NotIdealError,
    NotLeibnizError,
    NotLieError,
    NotSemisimpleAction,
    NotSemisimpleError,
    UndecidableIrreducibility,
)
from .lie import (
    KillingForm,
    SimpleIdealSplit,
    centroid,
    is_semisimple_lie,
    is_simple_lie,
    killing_form,
    solvable_radical_lie,
    split_simple_ideals,
)
from .linalg import Matrix, Subspace, kernel, rref
from .modules import (
    ComponentAction,
    IrreducibleChain,
    ModuleAction,
    ModuleDecomposition,
    canonical_module,
    decompose_sl2,
    direct_sum_modules,
    is_irreducible_sl2,
    tensor_pair_module,
    trivial_module,
)

__all__ = [name for name in dir() if not name.startswith("_")]
__version__ = "0.1.0"
