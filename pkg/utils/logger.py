"""
Logger configuration for the Z4 two-chain poset code toolkit.
"""
import logging
import os
from typing import Optional

from utils.config import settings

LOGGER_NAME = "z4_poset_codes"


def setup_logging(level: Optional[int] = None) -> logging.Logger:
    """
    Configure logging for the application.

    Args:
        level (Optional[int]): Logging level (default: settings.LOG_LEVEL)

    Returns:
        logging.Logger: Configured logger instance
    """
    logger = logging.getLogger(LOGGER_NAME)
    logger.setLevel(level if level is not None else settings.LOG_LEVEL)

    # handlers are attached once per process
    if logger.handlers:
        return logger

    formatter = logging.Formatter(settings.LOG_FORMAT, settings.LOG_DATE_FORMAT)

    # stdout carries reports and exports, so logs go to stderr
    stream_handler = logging.StreamHandler()
    stream_handler.setFormatter(formatter)
    logger.addHandler(stream_handler)

    if settings.LOG_FILE:
        log_dir = os.path.dirname(settings.LOG_FILE)
        if log_dir:
            os.makedirs(log_dir, exist_ok=True)
        file_handler = logging.FileHandler(settings.LOG_FILE)
        file_handler.setFormatter(formatter)
        logger.addHandler(file_handler)

    logger.propagate = False
    return logger


logger = setup_logging()
