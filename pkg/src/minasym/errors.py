"""Shared exception types."""


class ResourceGuardError(ValueError):
    """A requested computation exceeds a built-in feasibility guard."""
