from __future__ import annotations

import json

from pathlib import Path

import pytest

from obatalab.runtime import RunSession


def test_run_session_records_events_and_reports(tmp_path: Path) -> None:
    run_root = tmp_path / "runs"
    session = RunSession(run_root)
    assert session.run_id.startswith("run_")
    session.log_event("command", {"argv": ["table1"]})
    session.log_event("report", {"command": "table1", "passed": True})
    session.write_report("table1", {"passed": True})

    kinds = [event["kind"] for event in session.events()]
    assert kinds == ["command", "report"]
    assert session.reports() == [session.dirs.reports / "table1.json"]
    payload = json.loads(session.session_path.read_text())
    assert payload["run_id"] == session.run_id
    assert session.log_file == session.dirs.run_dir / "obata.log"


def test_run_session_writes_metadata(tmp_path: Path) -> None:
    session = RunSession(tmp_path / "runs")
    path = session.write_metadata("settings", {"dim_cap": 64})
    assert path.name == "settings.json"
    assert json.loads(path.read_text()) == {"dim_cap": 64}


def test_run_session_resume(tmp_path: Path) -> None:
    run_root = tmp_path / "runs"
    first = RunSession(run_root, "run_fixed")
    first.log_event("command", {"argv": []})
    created = first.session_path.read_text()

    resumed = RunSession(run_root, "run_fixed", resume=True)
    assert resumed.session_path.read_text() == created
    assert len(resumed.events()) == 1

    with pytest.raises(FileNotFoundError):
        RunSession(run_root, "run_missing", resume=True)
