"""Exception types shared across the package."""


class InputError(ValueError):
    """Caller-supplied values violate an operation's contract."""


class ContractError(ValueError):
    """A precondition on arguments or state does not hold."""


class LimitError(RuntimeError):
    """A computation would exceed a configured resource guard.

    ``partial`` carries whatever partial count was reached before the
    guard fired, when that is meaningful.
    """

    def __init__(self, message: str, partial: int | None = None):
        super().__init__(message)
        self.partial = partial


class BudgetExceededError(LimitError):
    """An explicit exploration budget ran out before a verdict was final."""


class Graph6Error(ValueError):
    """Malformed graph6 text; carries the failing byte offset."""

    def __init__(self, message: str, offset: int):
        super().__init__(f"{message} (byte {offset})")
        self.offset = offset
