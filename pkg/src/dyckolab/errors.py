"""Exception types shared across the library."""


class AlphabetError(ValueError):
    """A word contains symbols outside the alphabet an operation expects."""


class DomainError(ValueError):
    """An input is outside the mathematical domain of the operation."""


class CapExceeded(RuntimeError):
    """A computation would exceed a configured safety cap."""


class UnstableError(RuntimeError):
    """A prefix-based scan did not stabilize within the configured cap."""
