"""Exception hierarchy shared by every module of the package."""


class WeylMonoidError(ValueError):
    """Base class for all errors raised by this package."""


class NotGCM(WeylMonoidError):
    pass


class NotSymmetrizable(WeylMonoidError):
    pass


class IndexOutOfRange(WeylMonoidError):
    pass


class NotConnected(WeylMonoidError):
    pass


class NotSpecial(WeylMonoidError):
    pass


class DimensionMismatch(WeylMonoidError):
    pass


class EqualIndices(WeylMonoidError):
    pass


class RealizationMismatch(WeylMonoidError):
    pass


class NotInConeOrUnknown(WeylMonoidError):
    """Raised when a weight is not in the Tits cone, or membership is undecided."""


class SampleMismatch(WeylMonoidError):
    pass


class UnsupportedFormat(WeylMonoidError):
    pass


class ElementSyntaxError(WeylMonoidError):
    """Malformed element word. ``position`` is the 0-based character offset."""

    def __init__(self, message, position=None):
        super().__init__(message)
        self.position = position


class UnknownToken(ElementSyntaxError):
    pass


class NonSpecialTheta(ElementSyntaxError):
    pass


class SampleOverflow(WeylMonoidError):
    pass


class BudgetExhausted(WeylMonoidError):
    """A product could not be certified exact within its budget."""
