"""Exception types raised across the package."""


class MpxError(Exception):
    """Base class for all errors raised by mpx."""


class SelfLoop(MpxError, ValueError):
    pass


class DuplicateEdge(MpxError, ValueError):
    pass


class VertexOutOfRange(MpxError, ValueError):
    pass


class UnsupportedParameter(MpxError, ValueError):
    pass


class IneligibleVertex(MpxError, ValueError):
    pass


class InvalidEdgeId(MpxError, ValueError):
    pass


class NotAFacetPermutation(MpxError, ValueError):
    pass


class EmptyComplex(MpxError, ValueError):
    pass


class NotAcyclic(MpxError, ValueError):
    pass


class BudgetExceeded(MpxError, RuntimeError):
    """A search or enumeration hit its configured node/count cap."""

    def __init__(self, message, budget=None):
        super().__init__(message)
        self.budget = budget
