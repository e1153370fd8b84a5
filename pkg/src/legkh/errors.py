"""Exception types raised by the library."""


class LegkhError(Exception):
    """Base class for all library errors."""


class FrontSyntaxError(LegkhError, ValueError):
    """A front-word token could not be parsed."""

    def __init__(self, message, line=None, token=None):
        super().__init__(message)
        self.line = line
        self.token = token


class ValidationError(LegkhError, ValueError):
    """A front word does not describe a closed front diagram."""

    def __init__(self, message, event_index=None):
        super().__init__(message)
        self.event_index = event_index


class UnknownComponent(LegkhError, KeyError):
    pass


class AssignmentMismatch(LegkhError, ValueError):
    pass


class TooManyCrossings(LegkhError):
    def __init__(self, crossings, cap):
        super().__init__(f"{crossings} crossings exceeds the cap of {cap}")
        self.crossings = crossings
        self.cap = cap


class NegativePowerOfNonMonomial(LegkhError, ValueError):
    pass


class OddExponent(LegkhError, ValueError):
    pass


class DifferentFront(LegkhError, ValueError):
    pass


class NotAComplex(LegkhError):
    """The boundary map does not square to zero."""


class InvalidSite(LegkhError, ValueError):
    pass
