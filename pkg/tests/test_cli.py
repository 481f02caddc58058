from __future__ import annotations

import json

from pathlib import Path
from typing import Any, Dict, List

import pytest

from obatalab.cli import main
from obatalab.runtime.paths import list_run_ids


@pytest.fixture(autouse=True)
def _isolated_cwd(tmp_path: Path, monkeypatch: pytest.MonkeyPatch) -> None:
    monkeypatch.chdir(tmp_path)
    for name in ("OBATA_DIM_CAP", "OBATA_MAX_DEPTH", "OBATA_PSI_CAP"):
        monkeypatch.delenv(name, raising=False)


def _report(path: Path) -> Dict[str, Any]:
    return json.loads(path.read_text(encoding="utf-8"))


def test_decompose_realized_sp2(tmp_path: Path) -> None:
    out = tmp_path / "decompose.json"
    code = main(
        [
            "--no-record",
            "decompose",
            "--family",
            "sp",
            "--n",
            "2",
            "--realize",
            "--emit-basis",
            "--json",
            str(out),
        ]
    )
    assert code == 0
    report = _report(out)
    assert report["schema"] == "obatalab.report/1"
    assert report["passed"] is True
    results = report["results"]
    assert results["path"] == "realized"
    assert results["realized"]["dim"] == 12
    assert results["realized"]["f_hdims"] == [1, 0]
    assert results["decomposition"]["ell"] == 2
    assert "adapted_basis" in results
    assert report["checks"]["torsion_free"] is True


def test_exceptional_groups_default_to_the_diagram(tmp_path: Path) -> None:
    out = tmp_path / "e8.json"
    code = main(
        [
            "--no-record",
            "decompose",
            "--family",
            "e",
            "--n",
            "8",
            "--json",
            str(out),
        ]
    )
    assert code == 0
    results = _report(out)["results"]
    assert results["path"] == "diagram"
    assert results["decomposition"]["trivial_f"] == 4
    assert "realized" not in results


def test_table1_command(
    tmp_path: Path, capsys: pytest.CaptureFixture[str]
) -> None:
    out = tmp_path / "table.json"
    argv = ["--no-record", "table1", "--max-rank", "4", "--json", str(out)]
    assert main(argv) == 0
    report = _report(out)
    assert report["checks"]["table1"] is True
    assert report["results"]["matched"] == len(report["results"]["rows"])
    assert "rows agree with the closed forms" in capsys.readouterr().out
    assert main(["--no-record", "table1", "--max-rank", "1"]) == 2


def test_holonomy_sp2(tmp_path: Path) -> None:
    out = tmp_path / "holonomy.json"
    code = main(
        [
            "--no-record",
            "holonomy",
            "--family",
            "sp",
            "--n",
            "2",
            "--emit-theta",
            "--lie-closure",
            "--json",
            str(out),
        ]
    )
    assert code == 0
    results = _report(out)["results"]
    holonomy = results["holonomy"]
    assert holonomy["filtration"] == [7, 11, 11]
    assert holonomy["filtration_status"] == [
        "published",
        "published",
        "unverified-by-paper",
    ]
    assert holonomy["lie_closed"] is True
    assert results["trace_check"]["traceless"] is True
    assert "h2" in [s["label"] for s in results["parallel"]]
    theta = results["connection_form"]
    assert theta["labels"][0] == "phi^1_1"
    assert theta["matrix"][0][0] == {"phi^1_1": "-1"}


@pytest.mark.parametrize("extra", [[], ["--n", "3"]])
def test_hopf_holonomy_is_marked_published(
    tmp_path: Path, extra: List[str]
) -> None:
    out = tmp_path / "hopf.json"
    argv = ["--no-record", "holonomy", "--family", "hopf", *extra]
    assert main([*argv, "--json", str(out)]) == 0
    holonomy = _report(out)["results"]["holonomy"]
    assert holonomy["filtration"] == [0, 0]
    assert holonomy["filtration_status"][0] == "published"


def test_holonomy_refuses_groups_above_the_cap() -> None:
    assert main(["--no-record", "holonomy", "--family", "e", "--n", "8"]) == 2


def test_environment_cap_applies(monkeypatch: pytest.MonkeyPatch) -> None:
    monkeypatch.setenv("OBATA_DIM_CAP", "8")
    code = main(["--no-record", "holonomy", "--family", "sp", "--n", "2"])
    assert code == 2


def test_sweep_command(
    tmp_path: Path, capsys: pytest.CaptureFixture[str]
) -> None:
    csv_path = tmp_path / "sweep.csv"
    code = main(
        [
            "--no-record",
            "sweep",
            "--family",
            "hopf",
            "--curve",
            "t",
            "--t",
            "0,1/2,1",
            "--csv",
            str(csv_path),
        ]
    )
    assert code == 0
    assert csv_path.read_text(encoding="utf-8").startswith(
        "t,det,dim,filtration,parallel"
    )
    captured = capsys.readouterr()
    assert "skipped: singular A_t" in captured.out
    assert "t=0 skipped" in captured.err


def test_geometry_su3_without_metric(tmp_path: Path) -> None:
    out = tmp_path / "geometry.json"
    code = main(
        [
            "--no-record",
            "geometry",
            "--family",
            "su",
            "--n",
            "3",
            "--json",
            str(out),
        ]
    )
    assert code == 0
    report = _report(out)
    results = report["results"]
    assert results["ricci_zero"] is False
    assert results["dtheta_zero"] is False
    assert results["metric_compatible"] is False
    assert report["checks"]["lee_closed_iff_b_zero"] is True
    assert report["notes"]


def test_geometry_su3_twisted_cy_fails() -> None:
    code = main(
        [
            "--no-record",
            "geometry",
            "--family",
            "su",
            "--n",
            "3",
            "--twisted-cy",
        ]
    )
    assert code == 1


def test_geometry_hopf_with_semidirect_extension(tmp_path: Path) -> None:
    out = tmp_path / "hopf.json"
    code = main(
        [
            "--no-record",
            "geometry",
            "--family",
            "hopf",
            "--twisted-cy",
            "--semidirect",
            "1",
            "--rho",
            "standard",
            "--json",
            str(out),
        ]
    )
    assert code == 0
    results = _report(out)["results"]
    assert results["twisted_cy"]["passed"] is True
    assert results["lee_matches_eta"] is True
    assert results["semidirect"]["dim"] == 8
    assert results["semidirect"]["twisted_cy"]["passed"] is True


def test_usage_errors(tmp_path: Path) -> None:
    assert main([]) == 2
    assert main(["--config", str(tmp_path / "missing.yaml"), "table1"]) == 2
    bad = tmp_path / "bad.yaml"
    bad.write_text("obata:\n  method: guesswork\n", encoding="utf-8")
    assert main(["--config", str(bad), "table1"]) == 2
    code = main(
        ["--no-record", "geometry", "--family", "sp", "--n", "2", "--A", "1"]
    )
    assert code == 2


def test_recorded_runs_can_be_listed_and_shown(
    tmp_path: Path, capsys: pytest.CaptureFixture[str]
) -> None:
    runs = tmp_path / "runs"
    assert main(["--run-root", str(runs), "--list-runs"]) == 0
    assert main(["--run-root", str(runs), "table1", "--max-rank", "3"]) == 0
    run_ids = list_run_ids(runs)
    assert len(run_ids) == 1
    run_dir = runs / run_ids[0]
    assert (run_dir / "reports" / "table1.json").exists()
    assert (run_dir / "settings.json").exists()
    events = (run_dir / "events.jsonl").read_text(encoding="utf-8")
    assert '"kind": "report"' in events
    capsys.readouterr()
    assert main(["--run-root", str(runs), "--list-runs"]) == 0
    assert run_ids[0] in capsys.readouterr().out
    assert main(["--run-root", str(runs), "--show-run", run_ids[0]]) == 0
    assert "=== reports ===" in capsys.readouterr().out
    assert main(["--run-root", str(runs), "--show-run", "run_missing"]) == 1
