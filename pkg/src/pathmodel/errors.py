class PathModelError(Exception):
    """Base class for errors raised by this package."""


class CartanTypeError(PathModelError, ValueError):
    """Unknown letter or invalid (letter, rank) combination."""


class NotDominantError(PathModelError, ValueError):
    pass


class PreconditionError(PathModelError, ValueError):
    pass


class BoundExceeded(PathModelError, RuntimeError):
    """An enumeration hit a configured size bound.

    ``partial`` holds the number of objects produced before giving up.
    """

    def __init__(self, message: str, partial: int | None = None):
        super().__init__(message)
        self.partial = partial
