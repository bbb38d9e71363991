"""Exception hierarchy shared by every eulergraph module."""

from typing import Any


class EulerGraphError(ValueError):
    """Base class for input and domain errors raised by eulergraph."""

    kind = "error"

    def __init__(self, message: str, **details: Any):
        super().__init__(message)
        self.message = message
        self.details = details

    def to_dict(self) -> dict[str, Any]:
        """Machine-readable violation object used by the CLI."""
        data: dict[str, Any] = {"error": self.kind, "message": self.message}
        for key in sorted(self.details):
            data[key] = self.details[key]
        return data


class ConfigError(EulerGraphError):
    """Invalid configuration value."""

    kind = "config"


class TriangulationSyntaxError(EulerGraphError):
    """Malformed triangulation document."""

    kind = "syntax"

    def __init__(self, message: str, line: int, column: int = 1):
        super().__init__(f"line {line}, column {column}: {message}", line=line, column=column)
        self.line = line
        self.column = column


class TriangulationError(EulerGraphError):
    """Gluing data that does not describe a valid triangulation."""

    kind = "triangulation"


class HomologyError(EulerGraphError):
    """Chain complex misuse: wrong degree, non-cycle, non-cocycle."""

    kind = "homology"


class ComplexMismatchError(HomologyError):
    """Classes from different complexes (or bases) were combined."""

    kind = "complex_mismatch"


class BranchedError(EulerGraphError):
    """Inconsistent branched-complex data."""

    kind = "branched"


class OrientationError(EulerGraphError):
    """Edge orientation that cannot be used for the requested operation."""

    kind = "orientation"


class TautError(EulerGraphError):
    """Taut structure missing, malformed or failing its checks."""

    kind = "taut"


class UsageError(EulerGraphError):
    """Bad command line: unknown command or flag, malformed argument."""

    kind = "usage"
