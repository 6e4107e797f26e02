"""Exception types shared across the package."""


class OpenBookError(ValueError):
    """Base class for domain errors (bad diagrams, unmet move preconditions)."""


class ParseError(OpenBookError):
    """Malformed text input. ``lineno`` is 1-based when known."""

    def __init__(self, message, lineno=None):
        self.lineno = lineno
        if lineno is not None:
            message = f"line {lineno}: {message}"
        super().__init__(message)


class InvalidDiagram(OpenBookError):
    """A Heegaard diagram failed validation; ``violations`` lists why."""

    def __init__(self, violations):
        self.violations = list(violations)
        text = "; ".join(str(v) for v in self.violations)
        super().__init__(f"invalid Heegaard diagram: {text}")


class MoveError(OpenBookError):
    """A Kirby move was requested whose preconditions do not hold."""
