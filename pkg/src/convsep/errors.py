"""Exception types raised across the package."""


class ConvsepError(Exception):
    """Base class for all package errors."""


class DegenerateInputError(ConvsepError, ValueError):
    """A predicate was asked about a configuration the perturbation cannot resolve."""


class InvalidBodyError(ConvsepError, ValueError):
    """Vertices do not describe a counterclockwise strictly convex body."""


class NoIntersectionError(ConvsepError, ValueError):
    """Two bodies expected to intersect are disjoint."""


class InvalidAnchorError(ConvsepError, ValueError):
    """The two terminals s and t coincide."""


class ContainsTerminalError(ConvsepError, ValueError):
    """A body (or red box) contains s or t."""


class SameSetError(ConvsepError, ValueError):
    """unionext was called on two nodes that already share a root."""


class InvalidObstacleError(ConvsepError, ValueError):
    """Obstacle parameters are malformed."""


class TerminalOutsideError(ConvsepError, ValueError):
    """s or t is not strictly inside the unit configuration box."""


class UnsupportedBodyError(ConvsepError, ValueError):
    """The flood-fill oracle only handles axis-aligned boxes."""


class OracleViolationError(ConvsepError, RuntimeError):
    """An oracle produced an inconsistent coloring (green touching red)."""


class ParseError(ConvsepError, ValueError):
    """Malformed stream or scene file; ``line`` is 1-based."""

    def __init__(self, line, message, kind="syntax-error"):
        super().__init__(f"line {line}: {kind}: {message}")
        self.line = line
        self.kind = kind
