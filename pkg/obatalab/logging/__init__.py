"""Logging utilities."""

from .utils import DEFAULT_LOGGER_NAME, detach_file_logger, setup_file_logger

__all__ = [
    "DEFAULT_LOGGER_NAME",
    "detach_file_logger",
    "setup_file_logger",
]
