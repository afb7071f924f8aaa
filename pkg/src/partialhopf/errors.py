"""Exception types shared across the library."""


class PartialHopfError(Exception):
    """Base class for every error raised by this package."""


class DimensionMismatch(PartialHopfError):
    pass


class ShapeMismatch(PartialHopfError):
    pass


class SingularMatrix(PartialHopfError):
    pass


class ParseError(PartialHopfError):
    def __init__(self, message, where=None):
        super().__init__(message if where is None else f"{where}: {message}")
        self.where = where


class NotPrime(PartialHopfError):
    pass


class CharTwo(PartialHopfError):
    """Raised by constructions that need 2 to be invertible in the field."""


class InvalidGroup(PartialHopfError):
    pass


class GroupAxiomViolation(PartialHopfError):
    def __init__(self, message, pair=None):
        super().__init__(message)
        self.pair = pair


class NotARightIdeal(PartialHopfError):
    pass


class NotAnIdeal(PartialHopfError):
    pass


class NotASubmodule(PartialHopfError):
    pass


class NoUnit(PartialHopfError):
    pass


class SingularAntipode(PartialHopfError):
    pass


class ClosureViolation(PartialHopfError):
    """A span that is guaranteed closed by construction turned out not to be."""


class InconsistentSystem(PartialHopfError):
    """A linear extension that must be well defined was not."""


class CarrierEscape(PartialHopfError):
    """A value that must lie in the partial smash carrier does not."""


class PreconditionViolated(PartialHopfError):
    def __init__(self, kind, message=None):
        super().__init__(message or f"precondition violated: {kind}")
        self.kind = kind
