"""Exception hierarchy shared by the library and the command line."""

from typing import Optional


class KnotlabError(Exception):
    """Base class for every error raised by knotlab."""

    exit_code = 1


class CatalogFormatError(KnotlabError, ValueError):
    """A catalog file could not be parsed."""

    exit_code = 2

    def __init__(self, message: str, line: Optional[int] = None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class CatalogValidationError(KnotlabError, ValueError):
    """A catalog entry parsed but violates the unimodularity invariant."""

    exit_code = 3

    def __init__(self, name: str, message: str, line: Optional[int] = None):
        self.name = name
        self.line = line
        prefix = f"line {line}: " if line is not None else ""
        super().__init__(f"{prefix}entry '{name}': {message}")


class InvalidKnotError(KnotlabError, ValueError):
    """A Seifert model fails det(A - eps*A^T) = +-1."""

    exit_code = 3


class UnknownKnotError(KnotlabError, LookupError):
    """The requested knot is not in the catalog."""

    exit_code = 4


class UsageError(KnotlabError, ValueError):
    """Arguments are individually valid but do not fit together."""

    exit_code = 5


class ParityError(UsageError):
    """A twist parameter has the wrong parity for the requested construction."""


class MissingEpsilonError(UsageError):
    """An odd twist parameter was given without its epsilon choice."""


class ZeroTwistError(UsageError):
    """k = 0 was given where a branched cover is required."""


class DegeneratePresentationError(KnotlabError, ValueError):
    """A determinant or Alexander polynomial vanished."""


class DimensionMismatchError(KnotlabError, ValueError):
    """Vector or matrix sizes do not agree."""


class AmbientMismatchError(KnotlabError, ValueError):
    """Two submodules live in different ambient modules."""


class SignMismatchError(KnotlabError, ValueError):
    """Two Seifert models or forms carry different hermitian signs."""


class ConventionError(KnotlabError, RuntimeError):
    """An internal consistency check failed; signals a bug, not bad input."""
