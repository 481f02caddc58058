"""Typed helpers for parsing obatalab configuration dictionaries."""

from __future__ import annotations

import os

from dataclasses import dataclass, field, replace
from pathlib import Path
from typing import Any, Dict, Mapping, Optional, Tuple

from obatalab.constants import (
    ENV_DIM_CAP,
    ENV_MAX_DEPTH,
    ENV_PSI_CAP,
    HOLONOMY_METHODS,
    METHOD_FILTRATION,
)

DEFAULT_CONFIG_PATH = Path("configs/default_config.yaml")
DEFAULT_RUN_ROOT = ".obata_runs"


def _ensure_path(
    value: Optional[str | Path],
    *,
    config_root: Path,
    default: Optional[Path] = None,
) -> Path:
    if value is None:
        if default is None:
            raise ValueError("Path value is required")
        return default
    path = Path(value)
    if not path.is_absolute():
        path = (config_root / path).resolve()
    return path


def _positive_int(value: Any, name: str) -> int:
    number = int(value)
    if number < 1:
        raise ValueError(f"{name} must be a positive integer, got {value}")
    return number


@dataclass(frozen=True)
class HolonomySettings:
    method: str = METHOD_FILTRATION
    max_depth: int = 6
    dim_cap: int = 64
    workers: int = 0

    @property
    def active_workers(self) -> Optional[int]:
        return self.workers or None


@dataclass(frozen=True)
class GeometrySettings:
    psi_cap: int = 4


@dataclass(frozen=True)
class Table1Settings:
    max_rank: int = 8


@dataclass(frozen=True)
class RuntimeSettings:
    enabled: bool = True
    run_root: Path = field(
        default_factory=lambda: Path(DEFAULT_RUN_ROOT).resolve()
    )
    run_id: Optional[str] = None
    resume: bool = False
    report_templates: Tuple[Path, ...] = field(default_factory=tuple)


@dataclass(frozen=True)
class ObataSettings:
    holonomy: HolonomySettings = field(default_factory=HolonomySettings)
    geometry: GeometrySettings = field(default_factory=GeometrySettings)
    table1: Table1Settings = field(default_factory=Table1Settings)
    runtime: RuntimeSettings = field(default_factory=RuntimeSettings)

    def to_json(self) -> Dict[str, Any]:
        return {
            "method": self.holonomy.method,
            "max_depth": self.holonomy.max_depth,
            "dim_cap": self.holonomy.dim_cap,
            "workers": self.holonomy.workers,
            "psi_cap": self.geometry.psi_cap,
            "table1_max_rank": self.table1.max_rank,
            "run_root": str(self.runtime.run_root),
        }


def build_obata_settings(
    config: Dict[str, Any], *, config_root: Path
) -> ObataSettings:
    obata_cfg = config.get("obata") or {}
    method = str(obata_cfg.get("method", METHOD_FILTRATION))
    if method not in HOLONOMY_METHODS:
        raise ValueError(f"Unknown holonomy method '{method}'")
    holonomy = HolonomySettings(
        method=method,
        max_depth=_positive_int(obata_cfg.get("max_depth", 6), "max_depth"),
        dim_cap=_positive_int(obata_cfg.get("dim_cap", 64), "dim_cap"),
        workers=int(obata_cfg.get("workers", 0) or 0),
    )
    geometry = GeometrySettings(
        psi_cap=_positive_int(obata_cfg.get("psi_cap", 4), "psi_cap"),
    )
    table_cfg = obata_cfg.get("table1") or {}
    table1 = Table1Settings(
        max_rank=_positive_int(table_cfg.get("max_rank", 8), "max_rank"),
    )

    runtime_cfg = obata_cfg.get("runtime") or {}
    run_root = _ensure_path(
        obata_cfg.get("run_root", runtime_cfg.get("run_root")),
        config_root=config_root,
        default=Path(DEFAULT_RUN_ROOT).resolve(),
    )
    template_value = obata_cfg.get("report_templates")
    templates: Tuple[Path, ...] = tuple()
    if template_value:
        dirs = (
            list(template_value)
            if isinstance(template_value, (list, tuple))
            else [template_value]
        )
        templates = tuple(
            _ensure_path(item, config_root=config_root) for item in dirs
        )
    runtime = RuntimeSettings(
        enabled=bool(runtime_cfg.get("enabled", True)),
        run_root=run_root,
        run_id=runtime_cfg.get("run_id"),
        resume=bool(runtime_cfg.get("resume", False)),
        report_templates=templates,
    )
    return ObataSettings(
        holonomy=holonomy, geometry=geometry, table1=table1, runtime=runtime
    )


def apply_environment(
    settings: ObataSettings, environ: Optional[Mapping[str, str]] = None
) -> ObataSettings:
    """Layer OBATA_* variables over YAML values."""

    env = os.environ if environ is None else environ
    holonomy = settings.holonomy
    geometry = settings.geometry
    if env.get(ENV_DIM_CAP):
        holonomy = replace(
            holonomy, dim_cap=_positive_int(env[ENV_DIM_CAP], ENV_DIM_CAP)
        )
    if env.get(ENV_MAX_DEPTH):
        holonomy = replace(
            holonomy,
            max_depth=_positive_int(env[ENV_MAX_DEPTH], ENV_MAX_DEPTH),
        )
    if env.get(ENV_PSI_CAP):
        geometry = replace(
            geometry, psi_cap=_positive_int(env[ENV_PSI_CAP], ENV_PSI_CAP)
        )
    return replace(settings, holonomy=holonomy, geometry=geometry)


__all__ = [
    "DEFAULT_CONFIG_PATH",
    "DEFAULT_RUN_ROOT",
    "GeometrySettings",
    "HolonomySettings",
    "ObataSettings",
    "RuntimeSettings",
    "Table1Settings",
    "apply_environment",
    "build_obata_settings",
]
