"""Exception types shared across the package."""


class BorromeanError(Exception):
    """Base class for all library-specific errors."""


class BadParams(BorromeanError):
    """Family parameters violate the parity or ordering constraints."""


class NotInUhat(BorromeanError):
    """Operand is not an element of the crystallographic group."""


class NotARotation(BorromeanError):
    """Classification input is not a pure 180-degree rotation of the group."""


class IdentityElement(BorromeanError):
    """Axis extraction was asked for the identity."""


class FamilyMismatch(BorromeanError):
    """Operation requires the other canonical family."""


class InfiniteIndex(BorromeanError):
    """The generated subgroup has infinite index; .reason says which test failed."""

    def __init__(self, reason):
        super().__init__(reason)
        self.reason = reason


class VerificationInconclusive(BorromeanError):
    """Bounded verification could not complete; .partial carries what was found."""

    def __init__(self, reason, partial=None):
        super().__init__(reason)
        self.reason = reason
        self.partial = partial


class EmptyPlane(BorromeanError):
    """No suitable axis meets the requested plane."""


class DegenerateAxis(BorromeanError):
    """Chord endpoints coincide or lie outside the Klein ball."""


class DepthTooLarge(BorromeanError):
    """Tessellation depth exceeds the supported desk-scale bound."""
