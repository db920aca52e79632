"""Exception hierarchy. CLI exit codes hang off ``exit_code``."""


class CutscopeError(Exception):
    exit_code = 1


class InvalidGraphError(CutscopeError, ValueError):
    """Malformed graph, unknown family parameter, bad pairing or bad vertex subset."""

    exit_code = 3


class RingMismatchError(CutscopeError, ValueError):
    pass


class EmptyIdealError(CutscopeError, ValueError):
    pass


class InvalidExponentError(CutscopeError, ValueError):
    pass


class InvalidFieldError(CutscopeError, ValueError):
    exit_code = 2


class NotEquigeneratedError(CutscopeError, ValueError):
    pass


class UnsupportedInputError(CutscopeError, ValueError):
    pass


class InvalidDecompositionError(CutscopeError, ValueError):
    pass


class MethodMismatchError(CutscopeError, ValueError):
    exit_code = 4


class BudgetExceededError(CutscopeError, RuntimeError):
    """A resource guard tripped. ``partial`` carries whatever was finished."""

    exit_code = 5

    def __init__(self, message, partial=None):
        super().__init__(message)
        self.partial = partial
