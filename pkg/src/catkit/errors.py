"""Exception hierarchy shared by every layer."""


class CatkitError(Exception):
    """Base class for all library errors."""


class StructuralError(CatkitError):
    """Data that does not even describe the claimed kind of object."""


class ResourceLimitError(CatkitError):
    """A construction would exceed the configured morphism budget."""


class PreconditionError(CatkitError):
    """An operation was called on data missing a required property."""

    def __init__(self, message, witness=()):
        super().__init__(message)
        self.witness = tuple(witness)


class ConstructionError(CatkitError):
    """A derived object failed its own laws (an engine bug or a bad hypothesis)."""

    def __init__(self, message, witness=()):
        super().__init__(message)
        self.witness = tuple(witness)


class DomainError(CatkitError):
    """An operation was given an object outside the domain it is defined on."""
