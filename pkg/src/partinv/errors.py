"""Exception types shared across the package."""


class PartinvError(Exception):
    """Base class for all errors raised by this package."""


class ParseError(PartinvError):
    """Malformed partition text. Carries the offending position as a
    zero-based index into the input string."""

    def __init__(self, message: str, position: int):
        super().__init__(f"{message} (at position {position})")
        self.position = position


class ValidationError(PartinvError):
    """Structurally well-formed input that violates a standard-form invariant."""


class FormatError(PartinvError):
    """Compact serialization requested for a partition with an entry > 9."""


class BoundError(PartinvError):
    """Enumeration size outside the configured guard."""


class DomainError(PartinvError):
    """Index outside the triangle 1 <= k <= n."""


class NoNonsingletonBlock(PartinvError):
    """r is undefined: every block is a singleton."""


class OneIsSingleton(PartinvError):
    """s is undefined: {1} is a singleton block."""


class PreconditionError(PartinvError):
    """Operation called outside its stated precondition."""
