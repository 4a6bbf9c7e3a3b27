"""Exception types raised by the library."""


class NzGraphError(Exception):
    """Base class for all library errors."""


class CapExceededError(NzGraphError, ValueError):
    """The requested space has more nonzero vectors than the vertex cap allows."""


class ConsistencyError(NzGraphError, RuntimeError):
    """A constructed object disagrees with a closed-form count it must satisfy."""


class BudgetExceededError(NzGraphError, RuntimeError):
    """An exact search ran out of candidate budget before proving an optimum.

    Carries the number of candidates examined so callers can distinguish an
    unknown result from a proven one.
    """

    def __init__(self, message: str, examined: int = 0):
        super().__init__(message)
        self.examined = examined


class SizeMismatchError(NzGraphError, ValueError):
    pass


class NotTwinsError(NzGraphError, ValueError):
    pass


class PreconditionError(NzGraphError, ValueError):
    pass


class OrderTooLargeError(NzGraphError, ValueError):
    pass
