"""Exception types shared across the package."""


class KdmvError(Exception):
    """Base class for all package-specific errors."""


class ParseError(KdmvError):
    """Malformed graph6 / edge-list / spec-string input."""


class SpecError(KdmvError):
    """Generator or construction parameters outside the documented range."""


class SizeError(KdmvError):
    """Requested graph exceeds the supported vertex count."""


class ConnectivityError(KdmvError):
    """Operation requires a connected graph."""


class DistanceError(KdmvError):
    """Distance query on an unreachable vertex pair."""


class DomainError(KdmvError):
    """Input violates an operation's structural precondition."""


class ConditionError(KdmvError):
    """A theorem-specific hypothesis fails, so the construction does not apply."""


class VerificationError(KdmvError):
    """A builder produced an invalid certificate; this signals a bug, not bad input."""


class BudgetExceeded(KdmvError):
    """Internal signal: a solver ran out of its search-node budget."""

