from __future__ import annotations

from pathlib import Path

import pytest

from obatalab.configuration import (
    DEFAULT_RUN_ROOT,
    ObataSettings,
    apply_environment,
    build_obata_settings,
)


def test_build_obata_settings_resolves_paths(tmp_path: Path) -> None:
    config = {
        "obata": {
            "method": "alekseevskii",
            "max_depth": 3,
            "dim_cap": 40,
            "psi_cap": 2,
            "workers": 4,
            "table1": {"max_rank": 5},
            "report_templates": "templates/custom",
            "runtime": {
                "enabled": False,
                "run_root": "runs",
                "run_id": "run_fixed",
                "resume": True,
            },
        }
    }
    settings = build_obata_settings(config, config_root=tmp_path)
    assert settings.holonomy.method == "alekseevskii"
    assert settings.holonomy.max_depth == 3
    assert settings.holonomy.dim_cap == 40
    assert settings.holonomy.active_workers == 4
    assert settings.geometry.psi_cap == 2
    assert settings.table1.max_rank == 5
    assert settings.runtime.enabled is False
    assert settings.runtime.run_root == (tmp_path / "runs").resolve()
    assert settings.runtime.run_id == "run_fixed"
    assert settings.runtime.resume is True
    assert settings.runtime.report_templates == (
        (tmp_path / "templates/custom").resolve(),
    )


def test_defaults(tmp_path: Path, monkeypatch: pytest.MonkeyPatch) -> None:
    monkeypatch.chdir(tmp_path)
    settings = build_obata_settings({}, config_root=tmp_path / "configs")
    assert settings.holonomy.method == "filtration"
    assert settings.holonomy.max_depth == 6
    assert settings.holonomy.dim_cap == 64
    assert settings.holonomy.active_workers is None
    assert settings.geometry.psi_cap == 4
    assert settings.table1.max_rank == 8
    expected_root = (tmp_path / DEFAULT_RUN_ROOT).resolve()
    assert settings.runtime.run_root == expected_root
    assert settings.to_json()["dim_cap"] == 64


def test_invalid_values_raise(tmp_path: Path) -> None:
    with pytest.raises(ValueError, match="Unknown holonomy method"):
        build_obata_settings(
            {"obata": {"method": "guesswork"}}, config_root=tmp_path
        )
    with pytest.raises(ValueError, match="max_depth"):
        build_obata_settings(
            {"obata": {"max_depth": 0}}, config_root=tmp_path
        )


def test_environment_overrides_yaml() -> None:
    settings = apply_environment(
        ObataSettings(),
        {
            "OBATA_DIM_CAP": "128",
            "OBATA_MAX_DEPTH": "9",
            "OBATA_PSI_CAP": "3",
        },
    )
    assert settings.holonomy.dim_cap == 128
    assert settings.holonomy.max_depth == 9
    assert settings.geometry.psi_cap == 3
    assert apply_environment(settings, {}) == settings
    with pytest.raises(ValueError, match="OBATA_DIM_CAP"):
        apply_environment(ObataSettings(), {"OBATA_DIM_CAP": "-1"})
