from __future__ import annotations

import json

from pathlib import Path

import pytest

from obatalab.reporting import ReportRenderer, RunReport


def test_run_report_json(tmp_path: Path) -> None:
    report = RunReport("table1", inputs={"max_rank": 3})
    report.results["matched"] = 4
    assert report.check("table1", True)
    assert report.passed
    report.check("extra", False)
    report.note("one row disagrees")
    assert not report.passed
    payload = report.finish().to_json()
    assert payload["schema"] == "obatalab.report/1"
    assert payload["tool_version"] == "0.1.0"
    assert payload["checks"] == {"table1": True, "extra": False}
    assert payload["passed"] is False
    assert payload["timing_s"] is not None

    path = report.write(tmp_path / "nested" / "table1.json")
    assert json.loads(path.read_text())["notes"] == ["one row disagrees"]


def test_renderer_lists_packaged_templates() -> None:
    renderer = ReportRenderer()
    assert renderer.list_templates() == [
        "decompose.j2",
        "geometry.j2",
        "holonomy.j2",
        "sweep.j2",
        "table1.j2",
    ]


def test_renderer_prefers_overrides(tmp_path: Path) -> None:
    override = tmp_path / "custom"
    override.mkdir()
    (override / "table1.j2").write_text("rows={{ results.matched }}")
    renderer = ReportRenderer(extra_dirs=[override])
    assert renderer.search_paths[0] == override
    text = renderer.render("table1.j2", inputs={}, results={"matched": 2})
    assert text == "rows=2"


def test_renderer_missing_inputs(tmp_path: Path) -> None:
    with pytest.raises(FileNotFoundError):
        ReportRenderer(tmp_path / "missing")
    with pytest.raises(FileNotFoundError):
        ReportRenderer(extra_dirs=[tmp_path / "missing"])
    with pytest.raises(FileNotFoundError):
        ReportRenderer().render("absent.j2")
