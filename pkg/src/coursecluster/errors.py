"""Exception types raised across the package."""


class ClusteringError(Exception):
    """Base class for every error raised by coursecluster."""


class DimensionError(ClusteringError, ValueError):
    """Wrong number of items or mismatched vector dimensions."""


class ValidationError(ClusteringError, ValueError):
    """Input data violates a structural invariant."""


class ParseError(ValidationError):
    """Text input could not be parsed.

    ``row`` and ``column`` are 1-based positions in the source text when known.
    """

    def __init__(self, message, row=None, column=None):
        self.row = row
        self.column = column
        where = []
        if row is not None:
            where.append(f"row {row}")
        if column is not None:
            where.append(f"column {column}")
        if where:
            message = f"{', '.join(where)}: {message}"
        super().__init__(message)


class RangeError(ClusteringError, ValueError):
    """A numeric argument is outside its allowed range."""
