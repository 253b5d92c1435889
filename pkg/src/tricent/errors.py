class InputError(ValueError):
    """Malformed or out-of-range input (bad edge list records, invalid generator params)."""


class ConsistencyError(RuntimeError):
    """An internal invariant failed, signalling corrupt intermediate data."""
