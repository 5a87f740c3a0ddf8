"""Domain errors shared across the package."""


class EmptyWordError(ValueError):
    """Raised when an operation needs a word of length at least 1."""


class BadSentinelCountError(ValueError):
    """Raised when a word does not carry exactly one sentinel byte."""


class NotABwtImageError(ValueError):
    """Raised when a word is not the transform of any sentinel-terminated word."""


class NotNicePositionError(ValueError):
    """Raised when a preimage is requested for a position that is not admissible."""


class InvalidStateError(RuntimeError):
    """Raised when a forest operation is called outside its precondition."""


class TooLargeError(ValueError):
    """Raised when an exhaustive computation exceeds the configured budget."""
