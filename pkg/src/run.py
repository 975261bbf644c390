#!/usr/bin/env python
import sys

from cli import main
from config import (
    COLORED_LOGGING,
    FILE_LOGGING,
    JSON_LOGGING,
    LOG_BACKUP_COUNT,
    LOG_DIR,
    LOG_LEVEL,
    LOG_MAX_FILE_SIZE_MB,
)
from utils.logging_config import setup_logging

setup_logging(
    level=LOG_LEVEL,
    enable_json=JSON_LOGGING,
    enable_file_logging=FILE_LOGGING,
    enable_colors=COLORED_LOGGING,
    log_dir=LOG_DIR,
    max_file_size_mb=LOG_MAX_FILE_SIZE_MB,
    backup_count=LOG_BACKUP_COUNT,
)

if __name__ == "__main__":
    sys.exit(main())
