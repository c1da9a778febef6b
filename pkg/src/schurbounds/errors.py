"""Exception hierarchy shared by every module."""


class SchurBoundsError(Exception):
    """Base class for all library errors."""


class DimensionError(SchurBoundsError, ValueError):
    pass


class InfeasibleSetError(SchurBoundsError, ValueError):
    """The total lies outside [sum(lower), sum(upper)] or the bounds are inconsistent."""


class PreconditionError(SchurBoundsError, ValueError):
    pass


class NotIntegerizableError(PreconditionError):
    pass


class UnsupportedCaseError(SchurBoundsError, ValueError):
    pass


class ConsistencyError(SchurBoundsError, RuntimeError):
    """Two independent evaluations disagreed. Always an implementation bug."""


class InvalidGraphError(SchurBoundsError, ValueError):
    pass


class NotGraphicalError(SchurBoundsError, ValueError):
    pass


class OutOfClassError(SchurBoundsError, ValueError):
    """The degree sequence is outside the pendant class handled by the bounds."""


class CapacityError(SchurBoundsError, ValueError):
    """An exhaustive routine was asked for an instance above its size cap."""
