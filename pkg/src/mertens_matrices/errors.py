"""Exception types shared across modules."""


class BoundError(ValueError):
    """A sieve bound is zero or exceeds the memory cap."""


class RangeError(IndexError):
    """An argument lies outside a table's bound."""


class DomainError(ValueError):
    """An argument is outside the set an operation is defined on."""


class StructureError(ValueError):
    """Operands are attached to different quotient structures."""


class ShapeError(ValueError):
    """A matrix is not square or not symmetric."""


class OracleSizeError(ValueError):
    """A matrix is too large for the dense eigen-oracle."""
