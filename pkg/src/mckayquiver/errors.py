"""Exception hierarchy shared by the library and the CLI.

The CLI maps these onto exit codes: parse errors -> 2, validation errors -> 1,
resource limits -> 3.
"""


class McKayError(Exception):
    """Base class for all errors raised by this package."""


class PresentationSyntaxError(McKayError, ValueError):
    def __init__(self, message, position=None, text=None):
        self.position = position
        self.text = text
        if position is not None:
            message = f"{message} (at position {position})"
        super().__init__(message)


class CosetLimitExceeded(McKayError, RuntimeError):
    """Coset enumeration ran past ``max_cosets`` live cosets."""

    def __init__(self, max_cosets):
        self.max_cosets = max_cosets
        super().__init__(
            f"coset limit of {max_cosets} exceeded; the presentation may define "
            "an infinite or very large group"
        )


class ValidationError(McKayError, ValueError):
    """The (G, a, b) data does not describe an admissible grading."""


class TrivialGroup(ValidationError):
    pass


class AbelianGroup(ValidationError):
    pass


class NotInnerFaithful(ValidationError):
    pass


class MissingSquareRelation(ValidationError):
    pass


class MethodDisagreement(McKayError, RuntimeError):
    """Two independent decision procedures disagreed. Always a bug."""
