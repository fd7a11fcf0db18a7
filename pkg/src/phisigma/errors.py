"""Exception hierarchy shared by every module.

The CLI maps these onto exit codes, so the split matters:
domain/capacity problems are "your parameters are bad" (exit 1),
verification failures are "the math check did not pass" (exit 2).
"""


class PhisigmaError(Exception):
    """Base class for everything raised on purpose by this package."""


class DomainError(PhisigmaError):
    """An argument is outside the mathematical domain of the operation."""


class CapacityError(PhisigmaError):
    """The request is valid but exceeds a configured resource ceiling."""


class NotLiftableError(PhisigmaError):
    """The divisibility precondition of a totient lift fails.

    ``violations`` maps each offending prime q to the pair
    (v_q of the would-be divisor, v_q of the target), with the first
    component strictly larger.
    """

    def __init__(self, message, violations=None):
        super().__init__(message)
        self.violations = dict(violations or {})


class InfeasibleError(PhisigmaError):
    """A construction has an empty search space for these parameters."""


class VerificationError(PhisigmaError):
    """A certificate or witness failed its independent re-check."""
