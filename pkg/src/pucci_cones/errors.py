"""Exception hierarchy shared by all modules."""


class PucciConesError(Exception):
    """Base class for library errors."""


class DomainError(PucciConesError, ValueError):
    """An exponent or parameter lies outside the domain of a formula."""


class RangeError(PucciConesError, ValueError):
    """An argument (abscissa, angle) lies outside the admissible interval."""


class ConvergenceError(PucciConesError, RuntimeError):
    """A bracketing or iterative solver failed to converge."""


class DimensionError(PucciConesError, ValueError):
    pass


class SingularityError(PucciConesError, ZeroDivisionError):
    pass


class InfeasibleError(PucciConesError, RuntimeError):
    """No admissible parameters were found by a constructive search."""


class EvaluationError(PucciConesError, RuntimeError):
    """A user-supplied field could not be evaluated."""
