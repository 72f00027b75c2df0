"""
Exception hierarchy for quiverflip.

Usage and domain errors are ValueErrors so callers validating user input can
catch them uniformly. InvariantViolation is different: it means a property the
construction is supposed to guarantee did not hold, and it carries the trace
recorded up to the failure.
"""

from functools import partial
from typing import TYPE_CHECKING, Any, Optional

if TYPE_CHECKING:
    from quiverflip.construction.events import Trace


class QuiverError(Exception):
    """Base class for every error raised by quiverflip.

    Errors pickle as their constructor call, so they cross process pool
    boundaries with their attributes and message intact.
    """

    def __new__(cls, *args: Any, **kwargs: Any):
        error = super().__new__(cls, *args)
        error._constructor_args = (args, kwargs)
        return error

    def __reduce__(self):
        args, kwargs = self._constructor_args
        return partial(self.__class__, **kwargs), args


class UsageError(QuiverError, ValueError):
    """A caller passed an invalid vertex, arrow or parameter.

    Attributes:
        value: The offending value, when there is one
    """

    def __init__(self, message: str, value: Any = None):
        super().__init__(message)
        self.value = value


class CyclicQuiverError(QuiverError, ValueError):
    """A path query was asked of a quiver with an oriented cycle.

    Attributes:
        cycle: Vertex indices of one oriented cycle, if known
    """

    def __init__(self, message: str = "Quiver has an oriented cycle", cycle: Optional[list[int]] = None):
        if cycle:
            message = f"{message}: {' → '.join(str(v) for v in cycle)}"
        super().__init__(message)
        self.cycle = list(cycle or [])


class ResourceLimitError(QuiverError):
    """An enumeration was asked for more than its size guard allows."""

    def __init__(self, message: str, limit: int, requested: int):
        super().__init__(f"{message} (limit {limit}, requested {requested})")
        self.limit = limit
        self.requested = requested


class MalformedTraceError(QuiverError, ValueError):
    """A trace cannot be replayed.

    Attributes:
        event_index: Position of the offending event, if known
    """

    def __init__(self, message: str, event_index: Optional[int] = None):
        if event_index is not None:
            message = f"event [{event_index}]: {message}"
        super().__init__(message)
        self.event_index = event_index


class InvariantViolation(QuiverError):
    """A guarantee of the construction failed.

    Attributes:
        trace: Partial trace recorded up to the failing state
        state_index: Index i of the offending state Q^(i), if known
    """

    def __init__(self, message: str, trace: Optional["Trace"] = None, state_index: Optional[int] = None):
        if state_index is not None:
            message = f"state {state_index}: {message}"
        super().__init__(message)
        self.trace = trace
        self.state_index = state_index


class IterationCapExceeded(InvariantViolation):
    """Step 1 ran past its iteration cap."""

    def __init__(self, cap: int, trace: Optional["Trace"] = None):
        super().__init__(f"Step 1 did not finish within {cap} iterations", trace=trace)
        self.cap = cap
