"""Exception types shared across the package."""


class LinpolError(Exception):
    """Base class for every package-specific error."""


class EmptySystem(LinpolError):
    """A vector system needs at least one vector."""


class DimensionMismatch(LinpolError):
    """Vector or argument lengths are inconsistent."""


class NotUnitNorm(LinpolError):
    """A vector deviates from unit Euclidean norm beyond the acceptance band."""


class InvalidParams(LinpolError):
    """Arguments violate a documented precondition."""


class KindMismatch(LinpolError):
    """Sign/phase assignment kind is incompatible with the system's field."""


class TooLarge(LinpolError):
    """Too many vectors for exhaustive sign enumeration."""


class ZeroSum(LinpolError):
    """The signed sum vanishes, so the mean vector is undefined."""


class NonConvergence(LinpolError):
    """Iteration cap reached; carries the best iterate found so far."""

    def __init__(self, message, best=None):
        super().__init__(message)
        self.best = best


class NonPositive(LinpolError):
    """An array that must be strictly positive is not."""


class CrossCheckFailure(LinpolError):
    """Two independent internal computations disagree beyond tolerance."""


class TooHighDimensional(LinpolError):
    """Grid oracle only covers dimensions 1 to 3."""


class BoundViolation(LinpolError):
    """A proven norm inequality was violated numerically (optimizer bug)."""


class TooCloseToZeroSet(LinpolError):
    """Point too close to a factor zero for finite differencing."""


class NotFoundInRange(LinpolError):
    """No parameter in the scanned range satisfies the requested property."""


class NotARoot(LinpolError):
    """The polynomial does not vanish at the requested direction."""


class ZeroDirection(LinpolError):
    """The zero vector does not define a linear factor."""


class InvalidDimension(LinpolError):
    """Embedding dimension must be at least 2."""


class ResidualTooLarge(LinpolError):
    """Internal consistency residual exceeded its tolerance."""
