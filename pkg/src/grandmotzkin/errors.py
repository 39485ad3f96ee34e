"""Exception types shared across the package."""


class GrandMotzkinError(Exception):
    """Base class for all library errors."""


class PathParseError(GrandMotzkinError, ValueError):
    """Raised when a step string contains a character outside {U, F, D}."""

    def __init__(self, position: int, character: str):
        self.position = position
        self.character = character
        super().__init__(
            f"invalid step character {character!r} at index {position}"
        )


class TreeParseError(GrandMotzkinError, ValueError):
    """Raised when a parenthesis string is not a valid tree encoding."""


class DomainError(GrandMotzkinError, ValueError):
    """Raised when an argument is outside an operation's domain."""


class ArityError(DomainError):
    """Raised when a segment list or child list has the wrong length."""


class BoundExceededError(GrandMotzkinError):
    """Raised when an exhaustive enumeration would exceed the configured bound."""

    def __init__(self, requested: int, bound: int):
        self.requested = requested
        self.bound = bound
        super().__init__(
            f"enumeration of size {requested} exceeds the configured bound {bound}"
        )
