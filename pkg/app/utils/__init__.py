"""
Utilitários do simulador.
"""

from .logging import (
    create_file_handler,
    get_logger,
    log_error,
    log_performance,
    log_run_event,
    setup_logging,
)

__all__ = [
    "create_file_handler",
    "get_logger",
    "log_error",
    "log_performance",
    "log_run_event",
    "setup_logging",
]
