"""Exception types shared across the package."""


class InputError(ValueError):
    """Invalid caller-supplied data: bad type strings, indices, weights, degrees."""


class InternalError(RuntimeError):
    """An internal consistency check failed; indicates a bug, not bad input."""
