"""
Sistema de logging do simulador.

Structured logs (JSON or text) on stderr, optional file handler, and
helpers for run events, performance and errors. Logfire spans are wired in
app.utils.logfire_config.
"""

import json
import logging
import sys
from datetime import datetime, timezone
from functools import lru_cache
from pathlib import Path
from typing import Any, Dict, Optional

ROOT_LOGGER = "swarm_forage"

# Attributes every LogRecord has; anything else came in through `extra`.
_RESERVED = set(vars(logging.LogRecord("", 0, "", 0, "", None, None))) | {"message", "asctime"}


class JSONFormatter(logging.Formatter):
    """Formatador JSON para logs estruturados."""

    def format(self, record: logging.LogRecord) -> str:
        log_data: Dict[str, Any] = {
            "timestamp": datetime.now(timezone.utc).isoformat(),
            "level": record.levelname,
            "logger": record.name,
            "message": record.getMessage(),
            "module": record.module,
            "function": record.funcName,
            "line": record.lineno
        }

        # Contexto extra
        for key, value in record.__dict__.items():
            if key not in _RESERVED and not key.startswith("_"):
                log_data[key] = value

        if record.exc_info:
            log_data["exception"] = self.formatException(record.exc_info)

        return json.dumps(log_data, ensure_ascii=False, default=str)


class RunContextFilter(logging.Filter):
    """Garante que todo registro carregue um identificador de execução."""

    def filter(self, record: logging.LogRecord) -> bool:
        if not hasattr(record, "run_id"):
            record.run_id = "-"
        return True


class StderrHandler(logging.StreamHandler):
    """Console handler bound to whatever `sys.stderr` is at emit time."""

    def __init__(self) -> None:
        super().__init__(sys.stderr)

    @property
    def stream(self):
        return sys.stderr

    @stream.setter
    def stream(self, value) -> None:
        pass


def _formatter(format_type: str) -> logging.Formatter:
    if format_type == "json":
        return JSONFormatter()
    return logging.Formatter('%(asctime)s - %(name)s - %(levelname)s - [%(run_id)s] %(message)s')


def create_file_handler(
    log_file: str,
    level: str = "INFO",
    format_type: str = "json"
) -> logging.Handler:
    """
    Criar handler para arquivo de log.

    Args:
        log_file: Caminho do arquivo de log
        level: Nível de log
        format_type: Tipo de formatação

    Returns:
        Handler configurado
    """
    path = Path(log_file)
    path.parent.mkdir(parents=True, exist_ok=True)

    file_handler = logging.FileHandler(path)
    file_handler.setLevel(getattr(logging, level.upper()))
    file_handler.setFormatter(_formatter(format_type))
    file_handler.addFilter(RunContextFilter())
    return file_handler


@lru_cache()
def setup_logging(
    level: str = "INFO",
    format_type: str = "text",
    log_file: Optional[str] = None,
) -> logging.Logger:
    """
    Configurar o logger raiz do simulador.

    Console output goes to stderr; stdout is reserved for CSV rows.

    Args:
        level: Nível de log (DEBUG, INFO, WARNING, ERROR, CRITICAL)
        format_type: Tipo de formatação (json, text)
        log_file: Arquivo opcional que recebe os mesmos registros

    Returns:
        Logger configurado
    """
    logger = logging.getLogger(ROOT_LOGGER)
    logger.setLevel(getattr(logging, level.upper()))
    logger.propagate = False

    # Evitar duplicação de handlers
    if logger.handlers:
        return logger

    console_handler = StderrHandler()
    console_handler.setFormatter(_formatter(format_type))
    console_handler.addFilter(RunContextFilter())
    logger.addHandler(console_handler)

    if log_file:
        try:
            logger.addHandler(create_file_handler(log_file, level, format_type))
        except (FileNotFoundError, PermissionError) as e:
            logger.warning(f"Could not open log file {log_file}: {e}")

    logger.debug("Logging configured")
    return logger


@lru_cache()
def get_logger(name: Optional[str] = None) -> logging.Logger:
    """
    Obter logger do simulador.

    Args:
        name: Sufixo do logger (opcional)

    Returns:
        Logger `swarm_forage.<name>`
    """
    if name:
        return logging.getLogger(f"{ROOT_LOGGER}.{name}")
    return logging.getLogger(ROOT_LOGGER)


def log_run_event(
    run_id: str,
    tick: int,
    robot: int,
    event: str,
    details: Optional[Dict[str, Any]] = None,
    level: str = "DEBUG"
) -> None:
    """Log estruturado de um evento de robô durante uma execução."""
    logger = get_logger("simulation")
    if not logger.isEnabledFor(getattr(logging, level.upper())):
        return

    log_data: Dict[str, Any] = {"run_id": run_id, "tick": tick, "robot": robot, "event": event}
    if details:
        log_data.update({f"event_{key}": value for key, value in details.items()})

    getattr(logger, level.lower())(f"tick {tick} robot {robot}: {event}", extra=log_data)


def log_performance(
    operation: str,
    duration: float,
    details: Optional[Dict[str, Any]] = None,
    slow_after: float = 60.0
) -> None:
    """
    Log de performance para operações.

    Args:
        operation: Nome da operação
        duration: Duração em segundos
        details: Detalhes adicionais
        slow_after: Duração a partir da qual o registro vira warning
    """
    logger = get_logger("performance")

    log_data: Dict[str, Any] = {"operation": operation, "duration_seconds": duration}
    if details:
        log_data.update(details)

    level = "warning" if duration > slow_after else "info"
    getattr(logger, level)(f"Operation {operation} completed in {duration:.2f}s", extra=log_data)


def log_error(
    error: Exception,
    context: Optional[Dict[str, Any]] = None
) -> None:
    """
    Log estruturado de erros.

    Args:
        error: Exceção ocorrida
        context: Contexto adicional
    """
    logger = get_logger("errors")

    log_data: Dict[str, Any] = {
        "error_type": type(error).__name__,
        "error_message": str(error),
    }
    if context:
        log_data["context"] = context

    logger.error(f"Error: {type(error).__name__}: {error}", extra=log_data, exc_info=error)
