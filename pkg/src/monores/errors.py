"""Exception types shared across the package."""


class MonoresError(Exception):
    """Base class for all errors raised by monores."""


class RingMismatchError(MonoresError, ValueError):
    """Two monomials (or a monomial and an ideal) live in different rings."""


class EmptyIdealError(MonoresError, ValueError):
    pass


class CapacityError(MonoresError, ValueError):
    """An input exceeds a brute-force size guard."""


class MethodError(MonoresError, ValueError):
    """A requested method does not apply to the given input."""


class SupportError(MonoresError):
    """A labeled complex does not support a resolution of the given ideal."""

    def __init__(self, message, report=None):
        super().__init__(message)
        self.report = report


class ParseError(MonoresError, ValueError):
    def __init__(self, message, line=None, column=None):
        loc = ""
        if line is not None:
            loc = f"line {line}" + (f", column {column}" if column is not None else "") + ": "
        super().__init__(loc + message)
        self.line = line
        self.column = column
