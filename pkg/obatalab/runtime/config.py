"""Run sessions: one directory per CLI invocation."""

from __future__ import annotations

import json
import threading
import time
import uuid

from dataclasses import asdict, dataclass, field
from pathlib import Path
from typing import Any, Dict, List, Optional

from obatalab.constants import TOOL_VERSION
from obatalab.runtime.paths import RunDirectories, make_run_dirs


def _dump(payload: Any, *, sort_keys: bool = False) -> str:
    return json.dumps(payload, indent=2, sort_keys=sort_keys, default=str)


@dataclass
class EventRecord:
    """One line of ``events.jsonl``."""

    kind: str
    data: Dict[str, Any]
    ts: float = field(default_factory=time.time)

    def to_json_line(self) -> str:
        return json.dumps(asdict(self), default=str, sort_keys=True)


def new_run_id() -> str:
    stamp = time.strftime("%Y%m%d_%H%M%S")
    return f"run_{stamp}_{uuid.uuid4().hex[:8]}"


class RunSession:
    """Owns ``<run_root>/<run_id>/``: session file, events and reports.

    With ``resume=True`` the named run must already exist and its
    ``session.json`` is left untouched; new events and reports are
    appended next to the old ones.
    """

    def __init__(
        self,
        run_root: Path,
        run_id: Optional[str] = None,
        *,
        resume: bool = False,
    ) -> None:
        self.run_root = run_root
        self.resume = resume
        self.run_id = run_id or new_run_id()
        if resume and not (run_root / self.run_id).is_dir():
            raise FileNotFoundError(
                f"Run {self.run_id} not found under {run_root}"
            )
        # a fresh id cannot collide; an explicit one may be reused
        self.dirs: RunDirectories = make_run_dirs(
            run_root, self.run_id, exist_ok=run_id is not None
        )
        self.events_path = self.dirs.run_dir / "events.jsonl"
        self.session_path = self.dirs.run_dir / "session.json"
        self._lock = threading.Lock()
        if not (resume and self.session_path.exists()):
            self._write_session()

    def _write_session(self) -> None:
        header = {
            "run_id": self.run_id,
            "created_ts": time.time(),
            "run_dir": str(self.dirs.run_dir),
            "tool_version": TOOL_VERSION,
        }
        self.session_path.write_text(_dump(header), encoding="utf-8")

    @property
    def log_file(self) -> Path:
        return self.dirs.log_file

    def write_metadata(self, name: str, data: Dict[str, Any]) -> Path:
        target = self.dirs.run_dir / f"{name}.json"
        target.write_text(_dump(data), encoding="utf-8")
        return target

    def write_report(self, command: str, payload: Dict[str, Any]) -> Path:
        """Persist a report; sorted keys keep reruns diffable."""

        target = self.dirs.reports / f"{command}.json"
        target.write_text(_dump(payload, sort_keys=True), encoding="utf-8")
        return target

    def reports(self) -> List[Path]:
        return sorted(self.dirs.reports.glob("*.json"))

    def log_event(self, kind: str, data: Dict[str, Any]) -> None:
        line = EventRecord(kind=kind, data=data).to_json_line()
        with self._lock, self.events_path.open("a", encoding="utf-8") as fh:
            fh.write(line + "\n")

    def events(self) -> List[Dict[str, Any]]:
        if not self.events_path.exists():
            return []
        lines = self.events_path.read_text(encoding="utf-8").splitlines()
        return [json.loads(line) for line in lines if line.strip()]
