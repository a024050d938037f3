"""Exception types shared across the package."""


class ScaleCapError(Exception):
    """An enumeration or inclusion-exclusion size cap was exceeded."""


class ConsistencyError(Exception):
    """An internal exactness invariant failed; indicates a synthesis bug."""
