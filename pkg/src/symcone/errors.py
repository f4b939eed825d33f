"""Exception types shared across the package."""


class SymconeError(Exception):
    """Base class for errors raised by symcone."""


class PoleError(SymconeError):
    """A gamma factor or generalized Pochhammer symbol hit a pole / zero.

    Raised instead of silently returning 0 or inf; carries enough context to
    name the offending factor.
    """

    def __init__(self, message, *, where=None):
        super().__init__(message)
        self.where = where


class CapExceededError(SymconeError):
    """A configured degree or rank cap was exceeded (never silently truncated)."""


class ConvergenceError(SymconeError):
    """The truncated series hit its maximum degree while still moving."""

    def __init__(self, message, *, last_block=None, degree=None):
        super().__init__(message)
        self.last_block = last_block
        self.degree = degree


class SamplingError(SymconeError):
    """A Monte Carlo sampler could not produce usable samples (e.g. rejection
    acceptance rate collapsed)."""


class BoundViolationError(SymconeError):
    """The sup-norm bound check found a value above the theoretical bound."""

    def __init__(self, message, *, value=None, witness=None):
        super().__init__(message)
        self.value = value
        self.witness = witness
