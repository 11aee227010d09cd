"""Exception types shared across the simulator."""

from __future__ import annotations


class ParameterError(ValueError):
    """A sampling or channel parameter violates its contract."""


class ConfigError(ValueError):
    """A scenario/sweep configuration is invalid; message names the offending field."""

    def __init__(self, field: str, message: str):
        self.field = field
        super().__init__(f"{field}: {message}")


class NoCoverageError(RuntimeError):
    """Association was requested with an empty candidate set."""


class UndefinedEstimateError(RuntimeError):
    """Conditional capacity is undefined because no iteration was covered."""

    def __init__(self, message: str, coverage: float = 0.0):
        self.coverage = coverage
        super().__init__(message)
