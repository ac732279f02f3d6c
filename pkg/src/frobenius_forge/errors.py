"""Exception hierarchy.

Every error carries an ``exit_code`` so the command-line frontend can map it
without a lookup table: 1 for bad input, 2 for an inconclusive or
over-budget computation, 3 for a violated internal invariant.
"""


class ForgeError(Exception):
    exit_code = 3


class InputError(ForgeError, ValueError):
    exit_code = 1


class ZeroDiscriminant(InputError):
    """The trace form is degenerate: the extension is not generically separable."""


class Inconclusive(ForgeError):
    exit_code = 2


class BudgetExceeded(Inconclusive):
    pass


class FrontierInconclusive(Inconclusive):
    pass


class NotFFRT(Inconclusive):
    pass


class WindowTooSmall(Inconclusive):
    pass


class PresentationIncomplete(Inconclusive):
    pass


class NotPrimitive(Inconclusive):
    pass


class InvariantViolation(ForgeError):
    exit_code = 3


class NonIntegralMultiplicity(InvariantViolation):
    pass


class EigenCheckFailed(InvariantViolation):
    pass
