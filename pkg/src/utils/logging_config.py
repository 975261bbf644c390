import json
import logging
import os
import sys
from datetime import datetime
from logging.handlers import RotatingFileHandler
from typing import Any, Dict, Optional

import pytz

SERVICE_NAME = "qdp-toolkit"


class Colors:
    """ANSI color codes for terminal output."""
    RESET = '\033[0m'
    BOLD = '\033[1m'
    BLUE = '\033[34m'
    WHITE = '\033[37m'
    BRIGHT_BLACK = '\033[90m'
    BRIGHT_RED = '\033[91m'
    BRIGHT_YELLOW = '\033[93m'
    BRIGHT_CYAN = '\033[96m'


LOG_COLORS = {
    'DEBUG': Colors.BRIGHT_BLACK,
    'INFO': Colors.BRIGHT_CYAN,
    'WARNING': Colors.BRIGHT_YELLOW,
    'ERROR': Colors.BRIGHT_RED,
    'CRITICAL': Colors.BOLD + Colors.BRIGHT_RED,
}

# LogRecord attributes that are not structured context
_RECORD_ATTRIBUTES = frozenset({
    'name', 'msg', 'args', 'levelname', 'levelno', 'pathname', 'filename',
    'module', 'exc_info', 'exc_text', 'stack_info', 'lineno', 'funcName',
    'created', 'msecs', 'relativeCreated', 'thread', 'threadName',
    'processName', 'process', 'message', 'asctime', 'taskName',
})


class JSONFormatter(logging.Formatter):
    """One JSON object per record, carrying every `extra` field."""

    def __init__(self, service_name: str = SERVICE_NAME):
        super().__init__()
        self.service_name = service_name

    def format(self, record: logging.LogRecord) -> str:
        log_entry: Dict[str, Any] = {
            "timestamp": datetime.fromtimestamp(record.created, pytz.UTC).isoformat(),
            "service": self.service_name,
            "level": record.levelname,
            "logger": record.name,
            "message": record.getMessage(),
            "module": record.module,
            "function": record.funcName,
            "line": record.lineno,
            "thread": record.threadName,
        }

        if record.exc_info:
            log_entry["exception"] = {
                "type": record.exc_info[0].__name__ if record.exc_info[0] else None,
                "message": str(record.exc_info[1]) if record.exc_info[1] else None,
                "traceback": self.formatException(record.exc_info),
            }

        for key, value in record.__dict__.items():
            if key not in _RECORD_ATTRIBUTES:
                log_entry[key] = value

        return json.dumps(log_entry, default=str)


class ColoredFormatter(logging.Formatter):
    """Colored console formatter; appends `event_type` when present."""

    base_format = "%(asctime)s - %(name)s - %(levelname)s - %(message)s"

    def __init__(self, use_colors: bool = True):
        super().__init__(self.base_format)
        self.use_colors = use_colors and self._supports_color()

    @staticmethod
    def _supports_color() -> bool:
        if os.environ.get('NO_COLOR'):
            return False
        if os.environ.get('FORCE_COLOR') or os.environ.get('COLORTERM'):
            return True
        return hasattr(sys.stderr, 'isatty') and sys.stderr.isatty()

    def format(self, record: logging.LogRecord) -> str:
        event_type = getattr(record, "event_type", None)
        suffix = f" [{event_type}]" if event_type else ""
        if not self.use_colors:
            return super().format(record) + suffix

        level_color = LOG_COLORS.get(record.levelname, Colors.WHITE)
        timestamp = f"{Colors.BRIGHT_BLACK}{self.formatTime(record)}{Colors.RESET}"
        logger_name = f"{Colors.BLUE}{record.name}{Colors.RESET}"
        level_name = f"{level_color}{record.levelname}{Colors.RESET}"
        message = f"{level_color}{record.getMessage()}{Colors.RESET}"
        return f"{timestamp} - {logger_name} - {level_name} - {message}{suffix}"


def setup_logging(
    level: str = "INFO",
    service_name: str = SERVICE_NAME,
    enable_json: bool = False,
    enable_file_logging: bool = False,
    enable_colors: Optional[bool] = None,
    log_dir: str = "/tmp/qdp-toolkit-logs",
    max_file_size_mb: int = 50,
    backup_count: int = 10,
) -> None:
    """Configure console logging on stderr and optional rotating JSON files.

    Results are printed on stdout by the CLI, so console records never go there.

    Args:
        enable_colors: None (auto-detect), True (force enable), False (force disable)
    """
    root_logger = logging.getLogger()
    for handler in root_logger.handlers[:]:
        handler.close()
        root_logger.removeHandler(handler)

    if enable_json:
        console_formatter: logging.Formatter = JSONFormatter(service_name)
    else:
        console_formatter = ColoredFormatter(use_colors=enable_colors is not False)

    console_handler = logging.StreamHandler(sys.stderr)
    console_handler.setFormatter(console_formatter)

    log_level = getattr(logging, str(level).upper(), logging.INFO)
    console_handler.setLevel(log_level)
    root_logger.setLevel(log_level)
    root_logger.addHandler(console_handler)

    if enable_file_logging:
        try:
            os.makedirs(log_dir, exist_ok=True)
            log_file_path = os.path.join(log_dir, f"{service_name}.log")
            file_handler = RotatingFileHandler(
                log_file_path,
                maxBytes=max_file_size_mb * 1024 * 1024,
                backupCount=backup_count,
            )
            file_handler.setFormatter(JSONFormatter(service_name))
            file_handler.setLevel(log_level)
            root_logger.addHandler(file_handler)
        except OSError as e:
            print(f"Failed to setup file logging in {log_dir}: {e}", file=sys.stderr)


def get_logger(name: str) -> logging.Logger:
    """Get a logger instance with the specified name."""
    return logging.getLogger(name)


def log_event(
    logger: logging.Logger,
    level: str,
    message: str,
    event_type: Optional[str] = None,
    subcommand: Optional[str] = None,
    field: Optional[str] = None,
    trial: Optional[int] = None,
    seed: Optional[int] = None,
    config_hash: Optional[str] = None,
    extra: Optional[Dict[str, Any]] = None,
) -> None:
    """Log an event with structured experiment context."""
    context = {
        "event_type": event_type,
        "subcommand": subcommand,
        "field": field,
        "trial": trial,
        "seed": seed,
        "config_hash": config_hash,
    }

    if extra:
        context.update(extra)

    context = {k: v for k, v in context.items() if v is not None}

    log_method = getattr(logger, level.lower())
    log_method(message, extra=context)
