"""
Error hierarchy and centralized error handling for hilbert_caratheodory.

Every library error carries the process exit code the CLI reports for it:
0 success, 1 failure, 2 parse error, 3 precondition violation, 4 guard or
cap exceeded.
"""

import threading
import traceback
from typing import Any, Dict, Optional

from .logger import setup_logger

logger = setup_logger(__name__)


class HilbertCaratheodoryError(Exception):
    """Base class of all library errors."""
    exit_code = 1


class ParseError(HilbertCaratheodoryError):
    """Malformed matrix, cone, polytope, basis or vector text."""
    exit_code = 2


class PreconditionError(HilbertCaratheodoryError):
    """An operation was called outside its precondition."""
    exit_code = 3


class ShapeError(PreconditionError):
    """Matrix or vector has the wrong shape (e.g. non-square)."""


class DimensionMismatchError(PreconditionError):
    """Point dimension does not match the ambient dimension."""


class RankDeficientError(PreconditionError):
    """Matrix lacks the full rank the operation requires."""


class SingularMatrixError(PreconditionError):
    """Square matrix is singular."""


class NotPointedError(PreconditionError):
    """Cone contains a line (constraint matrix lacks full column rank)."""


class OutsideConeError(PreconditionError):
    """Point is not an element of the cone."""


class InfeasibleError(PreconditionError):
    """Linear program has no feasible point."""


class UnboundedError(PreconditionError):
    """Linear program is unbounded (signals a non-pointed input)."""


class UnboundedPolytopeError(PreconditionError):
    """Polyhedron is unbounded, so its lattice points cannot be listed."""


class LatticeFreeError(PreconditionError):
    """Affine hull of a face contains no integer point."""


class FaceDimensionError(PreconditionError):
    """Row set does not define a face of the stated dimension."""


class OutsideProjectionError(PreconditionError):
    """Point is outside the projected polyhedron of a face projection."""


class EmptyParallelepipedError(PreconditionError):
    """P_1(A) contains no non-zero lattice point."""


class PigeonholePreconditionError(PreconditionError):
    """Pigeonhole construction needs n >= |det A|."""


class GuardExceededError(HilbertCaratheodoryError):
    """A configured enumeration guard was exceeded."""
    exit_code = 4


class CapExceededError(GuardExceededError):
    """No representation was found within the requested cap."""


class StuckError(HilbertCaratheodoryError):
    """Face descent found no usable Hilbert basis element."""

    def __init__(self, message: str, trace: Any = None):
        super().__init__(message)
        self.trace = trace


class InternalCheckError(HilbertCaratheodoryError):
    """An internal certificate (round trip, bound, identity) failed."""


class ErrorHandler:
    """Centralized error logging and exit code mapping."""

    def __init__(self):
        self.logger = logger
        self.error_stats: Dict[str, int] = {}
        self.lock = threading.Lock()

    def handle_error(self, error: Exception, context: str, run_id: Optional[str] = None) -> int:
        """Log an error with context and return the exit code it maps to."""
        error_type = type(error).__name__

        with self.lock:
            self.error_stats[error_type] = self.error_stats.get(error_type, 0) + 1

        exit_code = getattr(error, "exit_code", 1)
        if isinstance(error, HilbertCaratheodoryError):
            self.logger.warning("Error in %s", context,
                                error_type=error_type,
                                error_message=str(error),
                                exit_code=exit_code,
                                run_id=run_id)
        else:
            self.logger.error("Unexpected error in %s", context,
                              error_type=error_type,
                              error_message=str(error),
                              run_id=run_id,
                              traceback=traceback.format_exc())
        return exit_code

    def get_error_stats(self) -> Dict[str, Any]:
        """Get error statistics."""
        with self.lock:
            return {"error_counts": dict(self.error_stats)}


# Global error handler instance
error_handler = ErrorHandler()
