"""Exceptions shared across the package."""


class AnomalyError(RuntimeError):
    """A mathematically impossible state was observed.

    Raised when a cross-checked invariant fails (two computation routes
    disagree, a divisor bound is violated, ...). Any occurrence is a
    headline event, never something to swallow.
    """


class CheckpointError(RuntimeError):
    """A scan checkpoint file is unreadable or inconsistent with the request."""
