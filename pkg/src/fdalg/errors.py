"""Exception types shared across the package."""


class DimensionMismatch(ValueError):
    pass


class SingularMatrix(ArithmeticError):
    pass


class ConvergenceFailure(ArithmeticError):
    pass


class NotInvertible(ArithmeticError):
    """Raised by ``invert`` when the element has no inverse.

    Non-invertibility is an ordinary mathematical outcome here, so callers
    typically catch it rather than treat it as a bug.
    """


class NotApplicable(ValueError):
    pass


class NotProper(ValueError):
    pass


class NotAnIdeal(ValueError):
    pass


class NotASubsetIdeal(ValueError):
    pass


class RankDeficient(ValueError):
    pass


class InapplicableNorm(ValueError):
    pass


class PreconditionViolated(ValueError):
    pass


class ParseError(ValueError):
    def __init__(self, message, line=None, column=None):
        where = f" (line {line}, column {column})" if line is not None else ""
        super().__init__(message + where)
        self.line = line
        self.column = column


class ValidationError(ValueError):
    """An algebra or semigroup failed its axiom checks.

    ``report`` is the full :class:`~fdalg.core.ValidationReport`.
    """

    def __init__(self, report):
        failure = report.first_failure()
        if failure is None:
            msg = "validation failed"
        else:
            msg = f"{failure.name} violated"
            if failure.where is not None:
                msg += f" at {tuple(failure.where)}"
            msg += f" (magnitude {failure.violation:.3g})"
        super().__init__(msg)
        self.report = report
