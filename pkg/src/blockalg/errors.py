"""Shared exception types."""


class BlockAlgError(Exception):
    """Base class for package-specific failures."""


class WindowInsufficientError(BlockAlgError):
    """A user-imposed row cap is smaller than the certified range needs.

    Raised instead of returning an answer whose vanishing would not certify
    vanishing for every integer row index.
    """


class WindowTooShortError(BlockAlgError):
    """A series window is too short for the requested recurrence order."""
