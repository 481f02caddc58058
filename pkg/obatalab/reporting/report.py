"""Versioned JSON run reports."""

from __future__ import annotations

import json
import time

from dataclasses import dataclass, field
from pathlib import Path
from typing import Any, Dict, List, Optional

from obatalab.constants import REPORT_SCHEMA, TOOL_VERSION


@dataclass
class RunReport:
    command: str
    inputs: Dict[str, Any]
    results: Dict[str, Any] = field(default_factory=dict)
    checks: Dict[str, bool] = field(default_factory=dict)
    notes: List[str] = field(default_factory=list)
    started: float = field(default_factory=time.perf_counter)
    timing_s: Optional[float] = None

    def check(self, name: str, passed: bool) -> bool:
        self.checks[name] = bool(passed)
        return bool(passed)

    def note(self, message: str) -> None:
        self.notes.append(message)

    @property
    def passed(self) -> bool:
        return all(self.checks.values())

    def finish(self) -> "RunReport":
        self.timing_s = round(time.perf_counter() - self.started, 3)
        return self

    def to_json(self) -> Dict[str, Any]:
        return {
            "schema": REPORT_SCHEMA,
            "tool_version": TOOL_VERSION,
            "command": self.command,
            "inputs": self.inputs,
            "results": self.results,
            "checks": self.checks,
            "notes": self.notes,
            "passed": self.passed,
            "timing_s": self.timing_s,
        }

    def dumps(self) -> str:
        return json.dumps(
            self.to_json(), indent=2, sort_keys=True, default=str
        )

    def write(self, path: Path) -> Path:
        path.parent.mkdir(parents=True, exist_ok=True)
        path.write_text(self.dumps() + "\n", encoding="utf-8")
        return path
