"""Exception taxonomy shared across the package."""

from __future__ import annotations


class RmtError(Exception):
    """Base class for all package errors."""


class DomainError(RmtError, ValueError):
    """Input outside the mathematical domain of an operation."""


class RangeOverflowError(RmtError, OverflowError):
    """Result magnitude not representable even in log form."""


class ToleranceError(RmtError):
    """Quadrature failed to reach the requested tolerance.

    Carries the best available estimate and the achieved error so callers
    can decide whether to accept it anyway.
    """

    def __init__(self, message: str, estimate=None, achieved: float | None = None):
        super().__init__(message)
        self.estimate = estimate
        self.achieved = achieved


class BracketError(RmtError, ValueError):
    """Root bracket invalid or no sign change found."""


class UnsupportedParametersError(RmtError, ValueError):
    """Parameter combination outside what the sampler supports."""


class SolverError(RmtError, RuntimeError):
    """Dense eigensolver failed to converge."""


class HypothesisError(RmtError, ValueError):
    """A checkable hypothesis of an asymptotic theorem is violated."""


class UsageError(RmtError, ValueError):
    """Operation called in a regime it does not cover."""


class ConsistencyError(RmtError, RuntimeError):
    """Internal relation that should hold by construction failed."""


class ConfigError(RmtError, ValueError):
    """Run configuration violates the documented schema."""
