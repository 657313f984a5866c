"""JSON structured logging for the ``stallings`` logger tree."""

import json
import logging
import os
import sys
from datetime import datetime, timezone
from typing import Any, TextIO

UTC = timezone.utc  # datetime.UTC alias (3.11+)

ROOT_LOGGER = "stallings"
LOG_FILE_NAME = "stallings.log"


class JSONFormatter(logging.Formatter):
    """One JSON object per record; keyword fields from StructuredLogger are merged in."""

    def format(self, record: logging.LogRecord) -> str:
        entry: dict[str, Any] = {
            "timestamp": datetime.fromtimestamp(record.created, UTC).isoformat(),
            "level": record.levelname,
            "logger": record.name,
            "message": record.getMessage(),
            "module": record.module,
            "func": record.funcName,
            "line": record.lineno,
        }
        fields = getattr(record, "extra_fields", None)
        if fields:
            entry.update(fields)
        if record.exc_info:
            entry["exception"] = self.formatException(record.exc_info)
        return json.dumps(entry, default=str)


def _file_handler(log_dir: str) -> logging.Handler | None:
    try:
        os.makedirs(log_dir, exist_ok=True)
        return logging.FileHandler(os.path.join(log_dir, LOG_FILE_NAME), encoding="utf-8")
    except OSError as e:
        sys.stderr.write(f"Failed to setup file logging: {e}\n")
        return None


def setup_logging(level: str = "WARNING", stream: TextIO | None = None) -> logging.Logger:
    """Route the package loggers to ``stream`` (stderr by default) and STALLINGS_LOG_DIR."""
    logger = logging.getLogger(ROOT_LOGGER)
    logger.setLevel(level.upper())
    for old in logger.handlers:
        old.close()
    logger.handlers = []
    logger.propagate = False

    handlers: list[logging.Handler] = [logging.StreamHandler(stream or sys.stderr)]
    log_dir = os.getenv("STALLINGS_LOG_DIR")
    if log_dir:
        file_handler = _file_handler(log_dir)
        if file_handler is not None:
            handlers.append(file_handler)
    for handler in handlers:
        handler.setFormatter(JSONFormatter())
        logger.addHandler(handler)
    return logger


class StructuredLogger:
    """``logger.info("Folded flower", states=5)``; fields become JSON keys."""

    def __init__(self, name: str, **context: Any):
        if name != ROOT_LOGGER and not name.startswith(ROOT_LOGGER + "."):
            name = f"{ROOT_LOGGER}.{name}"
        self.logger = logging.getLogger(name)
        self.context = context

    def bind(self, **fields: Any) -> "StructuredLogger":
        return StructuredLogger(self.logger.name, **{**self.context, **fields})

    def _log(self, level: int, msg: str, fields: dict[str, Any]) -> None:
        if self.logger.isEnabledFor(level):
            self.logger.log(level, msg, extra={"extra_fields": {**self.context, **fields}}, stacklevel=3)

    def debug(self, msg: str, **fields: Any) -> None:
        self._log(logging.DEBUG, msg, fields)

    def info(self, msg: str, **fields: Any) -> None:
        self._log(logging.INFO, msg, fields)

    def warning(self, msg: str, **fields: Any) -> None:
        self._log(logging.WARNING, msg, fields)

    def error(self, msg: str, **fields: Any) -> None:
        self._log(logging.ERROR, msg, fields)

    def critical(self, msg: str, **fields: Any) -> None:
        self._log(logging.CRITICAL, msg, fields)
