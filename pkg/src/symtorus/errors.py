"""Exception types shared across the package."""


class SymtorusError(Exception):
    """Base class for all package-specific errors."""


class ParseError(SymtorusError):
    """Malformed input: unknown tag, bad rational, wrong shape."""


class ValidationError(SymtorusError):
    """Structurally well-formed data violating a domain invariant."""


class OrderViolation(ValidationError):
    """A torsion image whose order differs from its cone order.

    ``indices`` lists the offending (0-based) torsion slots.
    """

    def __init__(self, indices, message=None):
        self.indices = tuple(indices)
        if message is None:
            message = "torsion image order mismatch at slots %s" % (self.indices,)
        super().__init__(message)


class SumViolation(ValidationError):
    """Torsion images whose sum is not the identity."""


class DependentBasis(ValidationError):
    """Lattice basis with linearly dependent columns."""


class PrerequisiteMismatch(ValidationError):
    """Two ingredient lists do not share the data required for comparison."""


class OrbitSizeExceeded(SymtorusError):
    """Orbit enumeration hit the configured state cap."""

    def __init__(self, cap):
        self.cap = cap
        super().__init__(
            "orbit enumeration exceeded the cap of %d states" % cap
        )
