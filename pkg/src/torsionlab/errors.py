"""Error types shared across the library."""


class TorsionLabError(Exception):
    """Base class for all library errors."""


class StructuralError(TorsionLabError):
    """Malformed object or morphism (endpoint mismatch, bad table, ...)."""


class ConstructionUnavailable(TorsionLabError):
    """A requested universal construction does not exist for this input.

    Carries a ``kind`` in {"pullback", "cokernel", "factorization"} so
    reports can distinguish which provider refused.
    """

    def __init__(self, kind, message):
        super().__init__(message)
        self.kind = kind


class BoundExceeded(TorsionLabError):
    """An enumeration request went past the documented hard cap."""
