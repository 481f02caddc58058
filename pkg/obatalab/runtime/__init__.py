"""Runtime helpers (run sessions, paths, parallel utilities)."""

from . import paths
from .config import EventRecord, RunSession, new_run_id
from .parallel import ordered_map

__all__ = [
    "EventRecord",
    "RunSession",
    "new_run_id",
    "ordered_map",
    "paths",
]
