class RangeError(ValueError):
    """An input lies outside the range where a construction or claim applies."""


class VerificationError(RuntimeError):
    """A computed certificate contradicts what the construction guarantees.

    Never expected in normal operation; raising it means there is a bug.
    """
