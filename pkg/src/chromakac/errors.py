"""Exception types shared across the package."""


class ChromakacError(Exception):
    """Base class for all operational errors raised by chromakac."""


class GraphParseError(ChromakacError, ValueError):
    def __init__(self, lineno, message):
        self.lineno = lineno
        super().__init__(f"line {lineno}: {message}")


class SizeLimitError(ChromakacError):
    """A configured guard (vertices, lattice size, colorings, ...) was exceeded."""

    def __init__(self, what, reached, limit):
        self.what = what
        self.reached = reached
        self.limit = limit
        super().__init__(f"{what} limit exceeded: reached {reached}, limit is {limit}")


class ContractViolation(ChromakacError, ValueError):
    """An operation was called outside its precondition."""


class LatticeLookupError(ChromakacError, KeyError):
    def __str__(self):
        return str(self.args[0]) if self.args else "element not in lattice"


class InvariantFailure(ChromakacError, AssertionError):
    """An identity that must hold exactly did not. Always a bug."""
