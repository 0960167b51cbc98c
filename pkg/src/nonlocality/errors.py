"""Exception types shared across the package."""

from __future__ import annotations


class NonlocalityError(Exception):
    """Base class for all errors raised by this package."""


class AlistFormatError(NonlocalityError):
    """Malformed alist text; carries the 1-based line number when known."""

    def __init__(self, message: str, line: int | None = None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class CommutationError(NonlocalityError):
    """X/Z check matrices anticommute; carries the first offending row pair."""

    def __init__(self, x_row: int, z_row: int):
        self.pair = (x_row, z_row)
        super().__init__(
            f"hx row {x_row} and hz row {z_row} overlap on an odd number of qubits"
        )


class GraphTooLargeError(NonlocalityError):
    """Exact (exponential) search requested on a graph above the size cap."""


class DisconnectedGraphError(NonlocalityError):
    """Operation requires a connected graph."""


class EmbeddingError(NonlocalityError):
    """Invalid embedding data (spacing, duplicate vertices, ragged rows)."""
