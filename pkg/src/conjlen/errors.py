"""Exception types shared across the package.

The CLI maps these onto exit codes: undecided -> 2, resource -> 3,
malformed input -> 4.
"""


class ConjlenError(Exception):
    pass


class MalformedInput(ConjlenError, ValueError):
    """A word, file or argument could not be interpreted."""


class DomainError(ConjlenError, ValueError):
    """An operation was called outside its mathematical domain (e.g. root of 1)."""


class NotAnAutomorphism(ConjlenError, ValueError):
    pass


class ResourceError(ConjlenError):
    """A configured budget (word length, node count, time) was exhausted."""

    def __init__(self, message, achieved=None):
        super().__init__(message)
        self.achieved = achieved


class Undecided(ConjlenError):
    """A bounded search ended without an answer either way."""

    def __init__(self, message, radius=None):
        super().__init__(message)
        self.radius = radius
