"""
Logging Configuration
structlog on top of stdlib logging; everything goes to stderr
"""

import logging
import sys

import structlog

_configured = False


def configure_logging(level: str = "WARNING", json_logs: bool = False) -> None:
    """Configure structlog once per process; later calls only adjust the level."""
    global _configured

    numeric_level = getattr(logging, level.upper(), logging.WARNING)
    logging.basicConfig(
        level=numeric_level,
        format="%(message)s",
        stream=sys.stderr,
    )
    logging.getLogger().setLevel(numeric_level)

    if _configured:
        return

    renderer = (
        structlog.processors.JSONRenderer()
        if json_logs
        else structlog.dev.ConsoleRenderer(colors=False)
    )
    structlog.configure(
        processors=[
            structlog.contextvars.merge_contextvars,
            structlog.stdlib.add_logger_name,
            structlog.stdlib.add_log_level,
            structlog.processors.TimeStamper(fmt="iso"),
            structlog.processors.format_exc_info,
            renderer,
        ],
        logger_factory=structlog.stdlib.LoggerFactory(),
        wrapper_class=structlog.stdlib.BoundLogger,
        cache_logger_on_first_use=True,
    )
    _configured = True
