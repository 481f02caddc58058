"""Directory layout of a run."""

from __future__ import annotations

from dataclasses import dataclass
from pathlib import Path


@dataclass(frozen=True)
class RunDirectories:
    """Standardized directory layout for RunSession artifacts."""

    run_dir: Path
    reports: Path
    log_file: Path

    def __getitem__(self, key: str) -> Path:
        try:
            return getattr(self, key)
        except AttributeError as exc:
            raise KeyError(key) from exc


def make_run_dirs(
    base: Path,
    run_id: str,
    *,
    exist_ok: bool = False,
) -> RunDirectories:
    run_dir = base / run_id
    reports = run_dir / "reports"
    for directory in (run_dir, reports):
        directory.mkdir(parents=True, exist_ok=exist_ok)
    return RunDirectories(
        run_dir=run_dir,
        reports=reports,
        log_file=run_dir / "obata.log",
    )


def list_run_ids(run_root: Path) -> list[str]:
    if not run_root.exists():
        return []
    return sorted(
        path.name
        for path in run_root.iterdir()
        if path.is_dir() and (path / "session.json").exists()
    )
