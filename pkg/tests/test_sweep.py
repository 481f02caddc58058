from __future__ import annotations

import csv

from pathlib import Path

import pytest

from obatalab.catalog import GroupSpec
from obatalab.core.rational import QQ
from obatalab.exceptions import DimensionMismatchError, SingularParameterError
from obatalab.sweep import (
    CSV_COLUMNS,
    ParameterCurve,
    parse_t_values,
    sweep_holonomy,
)


def test_curve_parsing() -> None:
    curve = ParameterCurve.parse("t,1-t;1+t,-t")
    assert curve.m == 2
    assert curve.at(QQ(1, 2)).to_json() == [["1/2", "1/2"], ["3/2", "-1/2"]]
    assert curve.at(QQ(7, 3)).det() == -1
    with pytest.raises(DimensionMismatchError):
        ParameterCurve.parse("t,1")
    with pytest.raises(ValueError):
        ParameterCurve.parse("s")


def test_curve_undefined_point() -> None:
    curve = ParameterCurve.parse("1/t")
    with pytest.raises(SingularParameterError):
        curve.at(QQ(0))
    assert curve.at(QQ(4)).to_json() == [["1/4"]]


def test_parse_t_values() -> None:
    assert parse_t_values("0, 1/2,-3,") == [QQ(0), QQ(1, 2), QQ(-3)]


def test_hopf_sweep_skips_singular_points(hopf: GroupSpec) -> None:
    result = sweep_holonomy(
        hopf, ParameterCurve.parse("t"), parse_t_values("0,1/2,1")
    )
    assert [row.t for row in result.rows] == ["0", "1/2", "1"]
    skipped = result.rows[0]
    assert skipped.skipped
    assert skipped.det == "0"
    assert skipped.reason == "singular A_t"
    assert [row.dim for row in result.computed] == [0, 0]
    assert result.rows[1].det == "1/2"
    assert result.jumps == []
    assert result.stabilized
    assert result.to_json()["skipped"] == ["0"]


def test_undefined_points_are_skipped(hopf: GroupSpec) -> None:
    result = sweep_holonomy(
        hopf, ParameterCurve.parse("1/t"), parse_t_values("0,2")
    )
    assert result.rows[0].skipped
    assert "undefined" in result.rows[0].reason
    assert result.rows[1].dim == 0


def test_sweep_writes_csv(hopf: GroupSpec, tmp_path: Path) -> None:
    result = sweep_holonomy(
        hopf, ParameterCurve.parse("t"), parse_t_values("0,1")
    )
    path = result.write_csv(tmp_path / "out" / "sweep.csv")
    with path.open(encoding="utf-8") as handle:
        reader = csv.DictReader(handle)
        rows = list(reader)
    assert tuple(reader.fieldnames or ()) == CSV_COLUMNS
    assert rows[0]["dim"] == ""
    assert rows[1] == {
        "t": "1",
        "det": "1",
        "dim": "0",
        "filtration": "0 0",
        "parallel": "",
    }


def test_sp2_sweep_on_a_unimodular_curve(sp2: GroupSpec) -> None:
    result = sweep_holonomy(
        sp2, ParameterCurve.parse("t,1-t;1+t,-t"), parse_t_values("0,1")
    )
    assert len(result.computed) == 2
    assert all(row.det == "-1" for row in result.rows)
    assert all(row.dim is not None for row in result.rows)


@pytest.mark.slow
def test_su5_sweep_from_swapped_to_triangular(su5: GroupSpec) -> None:
    result = sweep_holonomy(
        su5, ParameterCurve.parse("t,1-t;1+t,-t"), parse_t_values("0,1")
    )
    swapped, triangular = result.rows
    assert swapped.dim == 144
    assert swapped.filtration == [52, 138, 144]
    assert swapped.parallel == []
    assert triangular.dim == 112
    assert "tail2" in triangular.parallel
    assert result.jumps == ["1"]
