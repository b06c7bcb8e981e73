"""Exception hierarchy shared by every forcinglab module."""


class ForcingLabError(Exception):
    """Base class for all errors raised by forcinglab."""


class ParseError(ForcingLabError, ValueError):
    """Malformed braces literal or spec file.

    ``line`` and ``column`` are 1-based; ``position`` is the 0-based offset
    into the source text.
    """

    def __init__(self, message, position=None, line=None, column=None):
        self.position = position
        self.line = line
        self.column = column
        where = []
        if line is not None:
            where.append(f"line {line}")
        if column is not None:
            where.append(f"column {column}")
        elif position is not None:
            where.append(f"position {position}")
        if where:
            message = f"{message} ({', '.join(where)})"
        super().__init__(message)


class UnknownIdError(ForcingLabError, KeyError):
    def __str__(self):
        return str(self.args[0]) if self.args else "unknown id"


class DuplicateIdError(ForcingLabError, ValueError):
    pass


class CapExceededError(ForcingLabError):
    """An instance is larger than the configured caps allow."""


class HfOverflowError(CapExceededError):
    """Ackermann code wider than the configured bit width."""


class PreconditionError(ForcingLabError, ValueError):
    pass


class NotTransitiveError(PreconditionError):
    pass


class NotForcedTransitiveError(PreconditionError):
    pass


class EmptyFixpointError(PreconditionError):
    pass


class FixpointViolation(ForcingLabError, RuntimeError):
    """An extension promised by the fixpoint was not found."""
