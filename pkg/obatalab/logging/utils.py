"""Rotating per-run log files."""

from __future__ import annotations

import logging

from logging.handlers import RotatingFileHandler
from pathlib import Path
from typing import Optional

DEFAULT_LOGGER_NAME = "obatalab"
LOG_FORMAT = "%(asctime)s %(levelname)s %(name)s %(message)s"
MAX_LOG_BYTES = 2_000_000
LOG_BACKUPS = 3


def _tagged_handler(
    logger: logging.Logger, log_file: Path
) -> Optional[logging.Handler]:
    tag = str(log_file)
    for handler in logger.handlers:
        if getattr(handler, "_obata_tag", None) == tag:
            return handler
    return None


def setup_file_logger(
    log_file: Path, name: str = DEFAULT_LOGGER_NAME
) -> logging.Logger:
    """Send ``name`` and its children to ``log_file``.

    Calling it twice for the same file keeps a single handler.
    """

    logger = logging.getLogger(name)
    logger.setLevel(logging.INFO)
    if _tagged_handler(logger, log_file) is not None:
        return logger
    log_file.parent.mkdir(parents=True, exist_ok=True)
    handler = RotatingFileHandler(
        log_file, maxBytes=MAX_LOG_BYTES, backupCount=LOG_BACKUPS
    )
    handler.setLevel(logging.INFO)
    handler.setFormatter(logging.Formatter(LOG_FORMAT))
    handler._obata_tag = str(log_file)  # type: ignore[attr-defined]
    logger.addHandler(handler)
    return logger


def detach_file_logger(
    log_file: Path, name: str = DEFAULT_LOGGER_NAME
) -> None:
    logger = logging.getLogger(name)
    handler = _tagged_handler(logger, log_file)
    if handler is not None:
        logger.removeHandler(handler)
        handler.close()
