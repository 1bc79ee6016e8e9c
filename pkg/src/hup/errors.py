"""Exception types shared across the package."""


class HupError(Exception):
    """Base class for all errors raised by ``hup``."""


class NonConvergence(HupError):
    """An adaptive scheme ran out of budget before reaching its tolerance.

    The partial value and the error achieved so far are kept so callers can
    decide whether the result is still usable.
    """

    def __init__(self, message, value=None, error=None):
        super().__init__(message)
        self.value = value
        self.error = error


class DegenerateEta(HupError, ValueError):
    """The f_y route was asked to evaluate at (numerically) zero height."""


class DomainError(HupError, ValueError):
    """Exponents outside the range where a formula is defined."""


class SpecError(HupError, ValueError):
    """A node-set or construction specification violates its invariants."""


class PoleError(HupError, ValueError):
    """A pseudo-conformal map was evaluated on its pole ``a + b*eta = 0``."""


class DegenerateFit(HupError, ValueError):
    """A log-log fit has no spread in the abscissae."""
