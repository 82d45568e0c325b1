"""Exception types shared by all karabounds modules."""


class KaraboundsError(Exception):
    """Base class for every error raised by this package."""


class DomainError(KaraboundsError, ValueError):
    """An argument is outside the mathematical domain of an operation."""


class PreconditionError(KaraboundsError, ValueError):
    """A theorem hypothesis (convexity, ordering, dominance tag, ...) fails."""


class ShapeError(KaraboundsError, ValueError):
    """Mismatched lengths or matrix dimensions."""


class ConvergenceError(KaraboundsError, RuntimeError):
    """An iterative routine failed to converge; carries the residual."""

    def __init__(self, message, residual=None):
        super().__init__(message)
        self.residual = residual


class ConsistencyError(KaraboundsError, RuntimeError):
    """Two routes to the same value disagree beyond tolerance."""


class GeneratorExhausted(KaraboundsError, RuntimeError):
    """A rejection sampler hit its attempt cap without a valid draw."""
