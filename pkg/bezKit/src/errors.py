"""
Exception tree shared by every bezKit module.

PreconditionError covers inputs that violate a mathematical precondition of
an operation; InvariantViolationError means an internal identity that must
hold by construction did not, which is always a bug.
"""


class BezKitError(Exception):
    """Root of all bezKit errors."""


class PreconditionError(BezKitError):
    """The caller supplied data outside the domain of an operation."""


class InvariantViolationError(BezKitError):
    """An identity guaranteed by construction failed."""


class FieldMismatchError(PreconditionError):
    pass


class UndefinedGcdError(PreconditionError):
    pass


class ShapeError(PreconditionError):
    pass


class SymmetryError(PreconditionError):
    pass


class SizeError(PreconditionError):
    pass


class DegreeError(PreconditionError):
    pass


class DomainError(PreconditionError):
    pass


class SingularMatrixError(PreconditionError):
    def __init__(self, message, dim_ker):
        super().__init__(message)
        self.dim_ker = dim_ker


class MultipleZeroError(PreconditionError):
    pass


class CommonZeroError(PreconditionError):
    pass


class ConvergenceError(PreconditionError):
    def __init__(self, message, residuals=None):
        super().__init__(message)
        self.residuals = list(residuals) if residuals is not None else []


class DegenerateTripleError(PreconditionError):
    pass


class InvertibilityError(PreconditionError):
    pass


class DegenerateProjectionError(PreconditionError):
    pass


class NotAnIntersectionError(PreconditionError):
    pass


class OracleInapplicableError(PreconditionError):
    pass


class DegenerateMapError(PreconditionError):
    """Coincident image conics or an axis collapsing to a point."""


class ArithmeticInvariantError(InvariantViolationError):
    pass


class HankelStructureError(InvariantViolationError):
    pass
