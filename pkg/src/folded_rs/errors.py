class ParameterError(ValueError):
    """Invalid code, field or decoder parameters."""


class ContractViolation(AssertionError):
    """A proven bound or a post-condition failed to hold.

    Raised instead of returning a wrong answer. Seeing one means either a bug
    or a counterexample to one of the list-size bounds.
    """


class EnumerationLimitExceeded(RuntimeError):
    """An exhaustive search would exceed the configured enumeration cap."""

    def __init__(self, needed, limit):
        super().__init__(f"enumeration of {needed} points exceeds limit {limit}")
        self.needed = needed
        self.limit = limit


class ParseError(ValueError):
    """Malformed text input; carries the offending line number when known."""

    def __init__(self, message, line=None):
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)
        self.line = line
