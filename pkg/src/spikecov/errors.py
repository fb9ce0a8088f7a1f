"""Exception types raised across the package."""


class SpikecovError(Exception):
    """Base class for all package-specific errors."""


class InvalidInputError(SpikecovError, ValueError):
    """Input violates a precondition (non-finite, asymmetric, bad shape...)."""


class ConvergenceError(SpikecovError):
    """An iterative routine failed to converge.

    Carries the final off-diagonal residual when the backend exposes one
    (``nan`` otherwise).
    """

    def __init__(self, message: str, off_diagonal_residual: float = float("nan")):
        super().__init__(message)
        self.off_diagonal_residual = off_diagonal_residual


class RankError(SpikecovError, ValueError):
    """Requested more components than the (numerical) rank supports."""


class DegeneracyError(SpikecovError, ValueError):
    """A quantity required to be bounded away from zero is degenerate."""


class ConditioningError(SpikecovError, ValueError):
    """A matrix required to be positive definite is not.

    Carries the offending minimum eigenvalue.
    """

    def __init__(self, message: str, min_eigenvalue: float = float("nan")):
        super().__init__(message)
        self.min_eigenvalue = min_eigenvalue


class SeparationError(SpikecovError, ValueError):
    """Spike eigenvalues are tied or insufficiently separated."""


class RegimeError(SpikecovError, ValueError):
    """Parameters fall outside the validity regime of a formula."""


class DomainError(SpikecovError, ValueError):
    """Scalar argument outside the mathematical domain of a function."""


class NormalizationError(SpikecovError, ValueError):
    """A vector that must be unit norm is not."""


class UndefinedFdpError(SpikecovError, ValueError):
    """FDP requested with zero discoveries."""


class LoadingBoundError(SpikecovError, ValueError):
    """A loading row norm violates the correlation-model bound.

    Carries the offending row index.
    """

    def __init__(self, message: str, row: int = -1):
        super().__init__(message)
        self.row = row
