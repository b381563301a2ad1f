"""Exception hierarchy shared by all modules."""


class SkolemError(Exception):
    """Base class for errors raised by this package."""


class InvalidArgumentError(SkolemError, ValueError):
    pass


class DegenerateInputError(InvalidArgumentError):
    """Input violates a non-degeneracy precondition.

    ``value`` carries the degenerate result that would have been returned
    (for instance a zero discriminant).
    """

    def __init__(self, message, value=None):
        super().__init__(message)
        self.value = value


class PartialFactorizationError(SkolemError, ArithmeticError):
    """Factoring budget ran out with a composite cofactor left over.

    ``factors`` holds the primes found so far (with multiplicity) and
    ``cofactor`` the unfactored composite part.
    """

    def __init__(self, n, factors, cofactor):
        super().__init__(f"could not fully factor {n}: composite cofactor {cofactor} remains")
        self.n = n
        self.factors = list(factors)
        self.cofactor = cofactor


class NotGaloisError(SkolemError):
    """A field asserted to be Galois showed non-uniform splitting."""


class InvalidRootsError(InvalidArgumentError):
    pass


class InvalidFamilyError(InvalidArgumentError):
    pass


class ResourceError(SkolemError):
    """A configured work budget was exceeded."""


class InternalConsistencyError(SkolemError, AssertionError):
    pass
