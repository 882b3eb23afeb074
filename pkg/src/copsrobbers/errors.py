"""Exception hierarchy shared by every module."""


class CopsRobbersError(Exception):
    """Base class for all errors raised by this package."""


class GraphError(CopsRobbersError, ValueError):
    """Invalid graph construction or invalid vertex reference."""


class ParseError(GraphError):
    """Malformed edge-list document."""

    def __init__(self, message, line=None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class InstanceTooLargeError(CopsRobbersError):
    """An exhaustive computation was asked for beyond its configured cap."""

    def __init__(self, what, size, cap):
        self.what = what
        self.size = size
        self.cap = cap
        super().__init__(f"instance too large for {what}: {size} > cap {cap}")


class ResourceLimitError(InstanceTooLargeError):
    """The exact solver's state space exceeds the configured state cap."""


class HypothesisError(CopsRobbersError):
    """A strategy was placed on a graph that violates its hypothesis."""


class NoWinningStrategyError(CopsRobbersError):
    """Asked for a winning cop strategy from a robber-win position."""


class TransformError(CopsRobbersError, ValueError):
    """A graph transformation was applied outside its domain."""
