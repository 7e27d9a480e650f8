"""Typed errors shared across the package."""


class LeibnizError(Exception):
    """Base class for all library-specific errors."""


class DimensionMismatch(LeibnizError, ValueError):
    """Operands live in different ambient dimensions."""


class NotLeibnizError(LeibnizError):
    """An operation required a table satisfying the Leibniz identity."""

    def __init__(self, witness=None):
        self.witness = witness
        msg = "table does not satisfy the Leibniz identity"
        if witness is not None:
            msg += f" (witness triple {witness})"
        super().__init__(msg)


class NotLieError(LeibnizError):
    """An operation required an antisymmetric (Lie) table."""


class NotIdealError(LeibnizError):
    """A subspace expected to be a two-sided ideal is not."""


class ModuleAxiomError(LeibnizError):
    """Action matrices do not satisfy the right-module axiom."""


class NotSemisimpleAction(LeibnizError):
    """An action is not a valid integer-weight sl2 action (deficient eigenspaces)."""


class NonSplitUnsupported(LeibnizError):
    """The algebra has a simple summand that does not split over Q."""


class UndecidableIrreducibility(LeibnizError):
    """Module irreducibility over a non-sl2 component was needed but not declared."""


class NotSemisimpleError(LeibnizError):
    """An operation required a semisimple algebra."""


class LayoutError(LeibnizError):
    """A Levi layout is inconsistent with its algebra table."""
