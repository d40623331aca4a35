"""Exception types shared across the package.

Every error carries a short machine-readable ``code`` used by the CLI when
rendering data-level failures as ``ERR:<code>`` table cells.
"""


class QscatError(Exception):
    """Base class for all domain errors raised by this package."""

    code = "error"


class InvalidInputError(QscatError):
    """Arguments violate a precondition (non-finite, out of range, ...)."""

    code = "invalid"


class WrongCaseError(QscatError):
    """Energy lies in the wrong regime for the requested formula."""

    code = "wrongcase"


class DegenerateEnergyError(QscatError):
    """Energy sits exactly on a case boundary where the formulas are singular."""

    code = "degenerate"


class UnsupportedOperationError(QscatError):
    """The potential/operation combination has no defined result."""

    code = "unsupported"


class PoleError(QscatError):
    """A gamma-function or hypergeometric parameter hit a pole."""

    code = "pole"


class ConvergenceError(QscatError):
    """Series or quadrature failed to reach the requested tolerance.

    ``estimate`` holds the best value achieved, ``last_term`` the magnitude of
    the final series term (series case) or error estimate (quadrature case).
    """

    code = "noconv"

    def __init__(self, message, *, estimate=None, last_term=None):
        super().__init__(message)
        self.estimate = estimate
        self.last_term = last_term


class NoBarrierError(QscatError):
    """No classically forbidden region exists at the requested energy."""

    code = "nobarrier"
