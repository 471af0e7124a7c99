# utils/logging_config.py
import logging
import sys
from typing import Optional

from config.settings import get_log_file, get_log_level


def setup_logging(level: Optional[str] = None):
    handlers = [logging.StreamHandler(sys.stderr)]
    log_file = get_log_file()
    if log_file:
        handlers.append(logging.FileHandler(log_file))

    logging.basicConfig(
        level=getattr(logging, (level or get_log_level()).upper(), logging.INFO),
        format='%(asctime)s - %(levelname)s - %(message)s',
        handlers=handlers,
        force=True
    )
    return logging.getLogger(__name__)
