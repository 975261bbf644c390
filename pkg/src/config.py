"""
Experiment-wide settings derived from config.yaml.

Package-specific constants live in each package's constants.py.
"""

import os

import psutil

from utils.config_loader import config


def _resolve_dir_path(path_from_config, fallback_relative_path):
    """Convert a config path to an absolute path (relative paths are taken from the CWD)."""
    path = path_from_config or fallback_relative_path
    if os.path.isabs(path):
        return path
    return os.path.abspath(path)


OUTPUT_DIR = _resolve_dir_path(config.get("experiment.output_dir"), "results")
DEFAULT_SEED = int(config.get("experiment.seed", 20240611))

LOG_LEVEL = config.get("logging.level", "INFO")
JSON_LOGGING = bool(config.get("logging.json_format", False))
FILE_LOGGING = bool(config.get("logging.file_logging", False))
COLORED_LOGGING = bool(config.get("logging.colored_logging", True))
LOG_DIR = config.get("logging.file_path", "/tmp/qdp-toolkit-logs")
LOG_MAX_FILE_SIZE_MB = int(config.get("logging.max_file_size_mb", 50))
LOG_BACKUP_COUNT = int(config.get("logging.backup_count", 10))


def default_workers() -> int:
    """Configured worker count, or the number of physical cores when set to 0."""
    workers = int(config.get("experiment.workers", 0) or 0)
    if workers > 0:
        return workers
    return psutil.cpu_count(logical=False) or psutil.cpu_count() or 1
