"""
Logging configuration for hilbert_caratheodory.

Log events go to stderr through structlog on top of the stdlib ``logging``
module; stdout is reserved for command output.
"""

import logging
import sys
from typing import Optional

import structlog

_CONFIGURED = False


def configure_logging(level: str = "WARNING", json_output: bool = True) -> None:
    """Configure structlog and the stdlib root handler. Safe to call repeatedly."""
    global _CONFIGURED

    numeric_level = getattr(logging, level.upper(), logging.WARNING)
    root_logger = logging.getLogger()
    if not _CONFIGURED:
        handler = logging.StreamHandler(sys.stderr)
        handler.setFormatter(logging.Formatter("%(message)s"))
        root_logger.addHandler(handler)
    root_logger.setLevel(numeric_level)
    logging.getLogger("hilbert_caratheodory").setLevel(numeric_level)

    renderer = structlog.processors.JSONRenderer() if json_output else structlog.dev.ConsoleRenderer(colors=False)
    structlog.configure(
        processors=[
            structlog.stdlib.filter_by_level,
            structlog.stdlib.add_logger_name,
            structlog.stdlib.add_log_level,
            structlog.stdlib.PositionalArgumentsFormatter(),
            structlog.processors.TimeStamper(fmt="iso"),
            structlog.processors.StackInfoRenderer(),
            structlog.processors.format_exc_info,
            structlog.processors.UnicodeDecoder(),
            renderer,
        ],
        context_class=dict,
        logger_factory=structlog.stdlib.LoggerFactory(),
        wrapper_class=structlog.stdlib.BoundLogger,
        cache_logger_on_first_use=True,
    )
    _CONFIGURED = True


def setup_logger(name: str, level: Optional[str] = None) -> structlog.stdlib.BoundLogger:
    """
    Return a structured logger for a module.

    Args:
        name: Logger name, usually ``__name__``
        level: Optional level applied to the underlying stdlib logger

    Returns:
        Bound structlog logger
    """
    if not _CONFIGURED:
        from ..config.settings import settings

        configure_logging(settings.log_level, settings.log_json)
    if level is not None:
        logging.getLogger(name).setLevel(getattr(logging, level.upper(), logging.WARNING))
    return structlog.get_logger(name)
