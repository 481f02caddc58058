from __future__ import annotations

from logging.handlers import RotatingFileHandler
from pathlib import Path

from obatalab.logging import detach_file_logger, setup_file_logger


def _file_handlers(logger) -> list:
    return [h for h in logger.handlers if isinstance(h, RotatingFileHandler)]


def test_setup_file_logger_is_idempotent(tmp_path: Path) -> None:
    log_file = tmp_path / "run" / "obata.log"
    logger = setup_file_logger(log_file, name="obatalab.test_logging")
    setup_file_logger(log_file, name="obatalab.test_logging")
    assert len(_file_handlers(logger)) == 1
    logger.info("holonomy dim %d", 11)
    for handler in logger.handlers:
        handler.flush()
    assert "holonomy dim 11" in log_file.read_text()

    detach_file_logger(log_file, name="obatalab.test_logging")
    assert _file_handlers(logger) == []
