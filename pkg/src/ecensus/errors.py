"""Exception hierarchy for the census library."""


class CensusError(ValueError):
    """Base class for every error raised by ecensus."""


class InvalidCmParams(CensusError):
    """The triple (u, v, w) does not define an imaginary quadratic tau."""

    invariant = ""


class NonPositiveW(InvalidCmParams):
    invariant = "w > 0"


class NotCoprime(InvalidCmParams):
    invariant = "gcd(u, v, w) = 1"


class NonNegativeDiscriminant(InvalidCmParams):
    invariant = "u^2 - 4vw < 0"


class DimensionMismatch(CensusError):
    pass


class ZeroVector(CensusError):
    pass


class NotPrimitive(CensusError):
    pass


class DependentVectors(CensusError):
    pass


class InvalidClass(CensusError):
    pass


class PreconditionViolated(CensusError):
    pass


class ZeroMap(CensusError):
    pass


class InvalidPolarization(CensusError):
    invariant = "m_i >= 1"
