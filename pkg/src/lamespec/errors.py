"""Exception hierarchy.

Every error raised by the package derives from :class:`LameSpecError` and
also from the closest builtin (``ValueError`` / ``ArithmeticError``) so
callers can catch either.
"""


class LameSpecError(Exception):
    """Base class for all package errors."""


class NonDistinctRoots(LameSpecError, ValueError):
    pass


class UnorderedRoots(LameSpecError, ValueError):
    pass


class NonPositiveExponent(LameSpecError, ValueError):
    pass


class InvalidKappa(LameSpecError, ValueError):
    pass


class DegreeTooSmall(LameSpecError, ValueError):
    pass


class NonPositivePsi(LameSpecError, ValueError):
    """Off-diagonal products are not all positive; spectrum may be complex."""


class IndexOutOfRange(LameSpecError, IndexError):
    pass


class NotAnEigenvalue(LameSpecError, ValueError):
    pass


class NonPositiveInput(LameSpecError, ValueError):
    pass


class ModulusOutOfRange(LameSpecError, ValueError):
    pass


class NegativeInput(LameSpecError, ValueError):
    pass


class ArgumentAtOrAboveOne(LameSpecError, ValueError):
    pass


class QuadratureNotConverged(LameSpecError, ArithmeticError):
    pass


class ZeroDenominator(LameSpecError, ZeroDivisionError):
    pass


class OutOfSupport(LameSpecError, ValueError):
    pass


class AtLogSingularity(LameSpecError, ValueError):
    """Density requested too close to the logarithmic singularity at e2."""


class TooCloseToSingularity(LameSpecError, ValueError):
    pass


class EmptyInput(LameSpecError, ValueError):
    pass


class DuplicateAtoms(LameSpecError, ValueError):
    pass


class BadRange(LameSpecError, ValueError):
    pass


class InadmissibleParity(LameSpecError, ValueError):
    pass


class NoConvergence(LameSpecError, ArithmeticError):
    pass
