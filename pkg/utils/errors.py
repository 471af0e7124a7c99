"""Exception hierarchy shared by loaders, processors and the CLI."""
from typing import Optional


class DistTvError(Exception):
    """Base class for all disttv errors."""


class GraphFormatError(DistTvError, ValueError):
    """Malformed graph file content."""

    def __init__(self, message: str, source: str = "<text>", line: Optional[int] = None):
        self.source = source
        self.line = line
        location = f"{source}:{line}" if line is not None else source
        super().__init__(f"{location}: {message}")


class GraphValidationError(DistTvError, ValueError):
    """Graph violates the simple/connected/tree requirements."""


class MarginalValidationError(DistTvError, ValueError):
    """Marginal set is inconsistent or not a valid distribution."""


class DistributionValidationError(DistTvError, ValueError):
    """Subtree distribution or joint distribution is invalid."""


class LimitExceededError(DistTvError):
    """Instance too large for enumeration or an exact oracle."""


class ProbeDegeneracyError(DistTvError):
    """No well-conditioned probe system could be produced or used."""


class OracleError(DistTvError):
    """Internal failure of an exact oracle."""
