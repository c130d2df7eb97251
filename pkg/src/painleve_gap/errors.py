"""Exception types shared across the package."""


class PainleveGapError(Exception):
    """Base class for all numeric-domain errors raised by this package."""


class BadParameter(PainleveGapError):
    """A parameter is outside the supported/validated range."""


class DomainError(PainleveGapError):
    """An evaluation point is outside the domain of a formula."""


class NewtonDiverged(PainleveGapError):
    """Newton iteration for a boundary-value solve failed to converge."""

    def __init__(self, message, residual=None):
        super().__init__(message)
        self.residual = residual


class StepFailure(PainleveGapError):
    """An adaptive ODE integration failed (likely a pole of the trajectory)."""

    def __init__(self, message, last_x=None):
        super().__init__(message)
        self.last_x = last_x


class SingularMatrix(PainleveGapError):
    """A pivot of the Nystrom matrix vanished (determinant zero or negative)."""


class MissingTranscendent(PainleveGapError):
    """A kernel evaluation was requested without the required transcendent data."""


class TailTooLarge(PainleveGapError):
    """A truncated improper integral has an estimated tail above tolerance."""
