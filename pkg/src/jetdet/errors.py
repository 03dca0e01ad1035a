"""Exception types shared across the package."""


class JetdetError(Exception):
    """Base class for all errors raised by this package."""


class DimensionMismatch(JetdetError, ValueError):
    """Operands disagree on the number of variables or on vector length."""


class HypothesisViolation(JetdetError, ValueError):
    """An operation was invoked outside the hypotheses it is valid for."""


class NotRegular(HypothesisViolation):
    """The input form is not regular (its partials are not a regular sequence)."""


class InadmissiblePair(HypothesisViolation):
    """The pair (n, m) lies outside the admissible range of a construction."""


class NotCertified(JetdetError, RuntimeError):
    """No jet order within the configured resource caps certifies the claim.

    Typically means the singularity is non-isolated, or the caps are too
    small to decide.
    """


class ResourceCapExceeded(NotCertified):
    """A jet space would exceed the configured basis-size cap."""


class ConsistencyError(JetdetError, RuntimeError):
    """Two independently certified routes disagree; indicates a bug."""


class ParseError(JetdetError, ValueError):
    """Syntax or naming error in a polynomial expression."""

    def __init__(self, message: str, position: int | None = None):
        self.position = position
        if position is not None:
            message = f"{message} (at position {position})"
        super().__init__(message)
