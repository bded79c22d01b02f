"""Exception types shared across the package."""


class GaugeGraphError(Exception):
    """Base class for all package errors."""


class ConfigurationError(GaugeGraphError):
    """A graph/experiment description is invalid (bad sites, pattern, hoppings, keys)."""


class UsageError(GaugeGraphError):
    """An operation was called outside its contract (shape mismatch, bad label, ...)."""


class SolverError(GaugeGraphError):
    """A numerical routine failed to produce a result within tolerance."""
