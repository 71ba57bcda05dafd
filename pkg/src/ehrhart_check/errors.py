"""Exception hierarchy for ehrhart-check."""


class EhrhartCheckError(Exception):
    """Base class for all toolkit errors."""


class InputError(EhrhartCheckError):
    """Malformed polytope input.

    Args:
        message: Human readable description
        line: 1-based line of the offending input, if known
        column: 1-based column of the offending input, if known
    """

    def __init__(self, message: str, line: int | None = None, column: int | None = None):
        self.line = line
        self.column = column
        if line is not None:
            where = f"line {line}" if column is None else f"line {line}, column {column}"
            message = f"{where}: {message}"
        super().__init__(message)


class EmptyPolytopeError(InputError):
    """No points were given."""


class DimensionMismatchError(InputError):
    """A vector does not live in the expected ambient space."""


class NotInLatticeError(EhrhartCheckError):
    """A point has no integer coordinates in the given basis."""


class CapExceededError(EhrhartCheckError):
    """An instance is beyond the configured resource caps."""

    def __init__(self, what: str, size: int, cap: int):
        self.what = what
        self.size = size
        self.cap = cap
        super().__init__(f"{what} needs {size}, cap is {cap}")


class NotIDPError(EhrhartCheckError):
    """An operation requiring the integer decomposition property got a non-IDP polytope."""

    def __init__(self, witness: tuple[int, tuple[int, ...]] | None):
        self.witness = witness
        super().__init__(f"polytope is not IDP (witness {witness})")


class ConsistencyError(EhrhartCheckError):
    """An internal invariant failed. Always a bug, never a valid state."""
