"""Exception types shared across the package."""


class InputFormatError(ValueError):
    """Malformed instance file or out-of-contract argument at the I/O boundary."""

    def __init__(self, message, line=None):
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)
        self.line = line


class ResourceLimitError(RuntimeError):
    """A configured resource cap (table cells, vertex caps, mask width) was exceeded."""


# Hard representational limit: terminal subsets and Z-subsets are machine-word
# bit masks, so |T| and |Z| must fit in 62 bits.
MASK_WIDTH_LIMIT = 62

# Default cap on DP table cells; override with CVCKIT_LIMIT_CELLS or --limit-cells.
DEFAULT_CELL_LIMIT = 2**28


def resolve_cell_limit(limit=None):
    if limit is not None:
        return int(limit)
    import os

    env = os.environ.get("CVCKIT_LIMIT_CELLS")
    if env:
        return int(env)
    return DEFAULT_CELL_LIMIT
