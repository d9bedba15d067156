"""Exception types shared across the package.

The CLI maps these onto distinct exit codes, so library code should raise
the most specific one that applies.
"""


class InputError(ValueError):
    """Caller supplied an argument that violates a documented precondition."""


class ResourceError(RuntimeError):
    """Requested computation exceeds a configured size cap."""


class UnsupportedCaseError(ValueError):
    """Valid input for which no closed form / implementation is available."""
