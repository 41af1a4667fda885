import datetime
import json
import logging
import os
from fractions import Fraction
from typing import Any, Dict, List, Optional, TextIO

# Attributes every LogRecord carries; anything else came in through `extra=`.
_RECORD_ATTRS = frozenset(
    logging.LogRecord("", 0, "", 0, "", None, None).__dict__.keys()
) | {"message", "asctime", "taskName"}


def _jsonable(value: Any) -> Any:
    if isinstance(value, Fraction):
        return str(value)
    if isinstance(value, (set, frozenset)):
        return sorted(_jsonable(v) for v in value)
    return str(value)


class JSONFormatter(logging.Formatter):
    """
    One JSON object per record.

    Fields passed through ``extra={...}`` are appended as they are; Fractions
    and other exact values without a JSON type are rendered as strings.
    """

    def _envelope(self, record: logging.LogRecord) -> Dict[str, Any]:
        return {
            "timestamp": datetime.datetime.fromtimestamp(record.created).isoformat(),
            "level": record.levelname,
            "logger": record.name,
            "message": record.getMessage(),
            "module": record.module,
            "function": record.funcName,
            "line": record.lineno,
        }

    def format(self, record: logging.LogRecord) -> str:
        entry = self._envelope(record)
        if record.exc_info:
            entry["exception"] = self.formatException(record.exc_info)
        entry.update(
            (key, value)
            for key, value in record.__dict__.items()
            if key not in _RECORD_ATTRS and key not in entry
        )
        return json.dumps(entry, default=_jsonable)


def _handlers(log_file: Optional[str], stream: Optional[TextIO]) -> List[logging.Handler]:
    handlers: List[logging.Handler] = [logging.StreamHandler(stream)]
    if log_file:
        os.makedirs(os.path.dirname(os.path.abspath(log_file)), exist_ok=True)
        handlers.append(logging.FileHandler(log_file, encoding="utf-8"))
    return handlers


def setup_logging(
    level: str = "WARNING",
    log_file: Optional[str] = None,
    stream: Optional[TextIO] = None,
) -> None:
    """
    Point the root logger at JSON handlers, replacing any installed before.

    Console output goes to stderr by default so command results on stdout
    stay machine readable.
    """
    root = logging.getLogger()
    root.setLevel(level.upper())
    for handler in list(root.handlers):
        root.removeHandler(handler)

    formatter = JSONFormatter()
    for handler in _handlers(log_file, stream):
        handler.setFormatter(formatter)
        root.addHandler(handler)


def get_logger(name: str) -> logging.Logger:
    return logging.getLogger(name)
