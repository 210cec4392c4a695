"""Exception types shared across the package."""


class ComplexError(ValueError):
    """Malformed input or a violated precondition."""


class EmptyInput(ComplexError):
    pass


class BadLabel(ComplexError):
    pass


class NotAFace(ComplexError):
    pass


class UnknownVertex(ComplexError):
    pass


class NotFree(ComplexError):
    pass


class DimTooBig(ComplexError):
    pass


class DimensionMismatch(ComplexError):
    pass


class FacetMismatch(ComplexError):
    pass


class NotADualFace(ComplexError):
    pass


class InvalidObstruction(ComplexError):
    pass


class InvalidAsteroidalMap(ComplexError):
    pass


class SizeGuardExceeded(RuntimeError):
    """A configured enumeration bound was hit before the computation finished."""


class VerificationFailed(RuntimeError):
    """A freshly built certificate did not pass its own replay check.

    Seeing this means there is a bug, never a property of the input.
    """
