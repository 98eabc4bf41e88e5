"""Exception hierarchy shared by every module in the package."""


class InvolutionError(ValueError):
    """Base class for all domain errors raised by this package."""


class DuplicateEntry(InvolutionError):
    pass


class NotStandardForm(InvolutionError):
    pass


class SignBalanceViolation(InvolutionError):
    pass


class KOutOfRange(InvolutionError):
    pass


class NonIntegerDimension(InvolutionError):
    pass


class NotAPermutation(InvolutionError):
    pass


class ShapeMismatch(InvolutionError):
    pass


class InvalidPath(InvolutionError):
    pass


class LabelOutOfRange(InvalidPath):
    pass


class IndexOutOfRange(InvolutionError):
    pass


class NOutOfRange(InvolutionError):
    pass


class OrderMismatch(InvolutionError):
    pass


class NonUnitConstant(InvolutionError):
    pass


class NonOneConstant(InvolutionError):
    pass


class NonZeroConstant(InvolutionError):
    pass


class NonZeroInnerConstant(InvolutionError):
    pass


class InternalDivisibilityFailure(ArithmeticError):
    """A series that must be divisible by a variable was not; signals a bug."""


class IncompleteSupport(InvolutionError):
    """Entries do not cover 1..n exactly."""
