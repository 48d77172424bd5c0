"""
Utility modules for hilbert_caratheodory.
"""

from .error_handling import (
    CapExceededError,
    GuardExceededError,
    HilbertCaratheodoryError,
    ParseError,
    PreconditionError,
    StuckError,
    error_handler,
)
from .helpers import ensure_directory_exists, format_fraction, primitive
from .logger import configure_logging, setup_logger
from .validators import validate_box_radius, validate_cap, validate_matrix_rows, validate_strategy

__all__ = [
    "setup_logger",
    "configure_logging",
    "error_handler",
    "HilbertCaratheodoryError",
    "ParseError",
    "PreconditionError",
    "GuardExceededError",
    "CapExceededError",
    "StuckError",
    "ensure_directory_exists",
    "primitive",
    "format_fraction",
    "validate_box_radius",
    "validate_cap",
    "validate_matrix_rows",
    "validate_strategy",
]
