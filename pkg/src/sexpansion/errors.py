"""Exception hierarchy shared by all modules."""


class SExpansionError(Exception):
    """Base class for every error raised by this package."""


class NonSymmetric(SExpansionError, ValueError):
    pass


class SingularMatrix(SExpansionError, ValueError):
    pass


class IndexOutOfRange(SExpansionError, IndexError):
    pass


class UnknownName(SExpansionError, KeyError):
    pass


class InvalidAlgebra(SExpansionError, ValueError):
    """Raised when structure constants violate antisymmetry or Jacobi."""

    def __init__(self, message, witness=None):
        super().__init__(message)
        self.witness = witness


class InvalidSemigroup(SExpansionError, ValueError):
    def __init__(self, message, witness=None):
        super().__init__(message)
        self.witness = witness


class NoZeroElement(SExpansionError, ValueError):
    pass


class MalformedPartition(SExpansionError, ValueError):
    pass


class ResonanceFailed(SExpansionError, ValueError):
    pass


class NotInvariantBase(SExpansionError, ValueError):
    pass


class InvalidCounts(SExpansionError, ValueError):
    pass


class IllDefinedAngle(SExpansionError, ValueError):
    pass


class UnconstrainedSource(SExpansionError, ValueError):
    pass


class PlanOutOfBounds(SExpansionError, ValueError):
    pass


class NoCertificate(SExpansionError, ValueError):
    pass


class ParseError(SExpansionError, ValueError):
    """Input text is not a recognised algebra, semigroup or decomposition."""
