"""Exception hierarchy. CLI exit codes are attached to the classes."""


class RadonSmoothError(Exception):
    exit_code = 1


class InputError(RadonSmoothError, ValueError):
    """Malformed or out-of-range user input."""

    exit_code = 2


class PolynomialSyntaxError(InputError):
    def __init__(self, message, position=None, text=None):
        self.position = position
        self.text = text
        if position is not None:
            message = f"{message} (at position {position})"
            if text is not None:
                message += f"\n  {text}\n  {' ' * position}^"
        super().__init__(message)


class DimensionMismatchError(InputError):
    pass


class HypothesisViolation(RadonSmoothError):
    """A required hypothesis does not hold for the requested construction."""

    exit_code = 3


class NumericalError(RadonSmoothError):
    exit_code = 4


class QuadratureError(NumericalError):
    def __init__(self, message, achieved_error=None):
        self.achieved_error = achieved_error
        super().__init__(message)


class InsufficientDataError(NumericalError):
    pass


class InfeasibleError(RadonSmoothError):
    """An exact LP had no feasible point where one was required."""
