"""Exception hierarchy shared by every module."""


class SturmZerosError(Exception):
    """Base class for all errors raised by this package."""


class ParameterOutOfRange(SturmZerosError, ValueError):
    """A family parameter violates a required inequality.

    ``condition`` holds the failed inequality in readable form, e.g.
    ``"alpha > -1"``.
    """

    def __init__(self, condition, detail=""):
        self.condition = condition
        msg = f"parameter out of range: requires {condition}"
        if detail:
            msg += f" ({detail})"
        super().__init__(msg)


class DegreeNonPositive(ParameterOutOfRange):
    def __init__(self, n):
        super().__init__("n >= 1", f"got n={n!r}")


class Overflow(SturmZerosError, OverflowError):
    """Magnitudes exceed what the double-precision recurrence supports."""


class DomainViolation(SturmZerosError, ValueError):
    """An argument lies outside the open interval where a function is defined."""


class UnsupportedFamily(SturmZerosError, TypeError):
    """The operation is not defined for the requested polynomial family."""


class ConvergenceFailure(SturmZerosError, ArithmeticError):
    def __init__(self, message, index=None):
        self.index = index
        if index is not None:
            message = f"zero #{index}: {message}"
        super().__init__(message)


class DegreeTooSmall(SturmZerosError, ValueError):
    """Too few zeros to form the requested differences."""


class DegenerateCubic(SturmZerosError, ArithmeticError):
    """The cubic numerator of F' lost its leading term."""
