"""Exception types shared across the package."""


class DimensionError(ValueError):
    """Input matrix has the wrong shape for the requested operation."""


class NumericalError(RuntimeError):
    """A dense linear-algebra routine failed to converge."""


class NotPositiveSemidefiniteError(ValueError):
    """Matrix has an eigenvalue below the PSD tolerance."""


class StructureError(ValueError):
    """Operation requires bipartite structure metadata that is missing."""


class ResourceLimitError(RuntimeError):
    """Requested computation exceeds the configured size budget."""
