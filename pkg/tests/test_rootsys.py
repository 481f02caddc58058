from __future__ import annotations

import pytest

from obatalab.catalog import GroupSpec, decomposition_for
from obatalab.core.lie import is_positive_definite
from obatalab.exceptions import InvalidRootSystemError
from obatalab.rootsys import (
    build_root_system,
    chevalley_compact_form,
    closed_form_trivial_count,
    diagram_joyce_decomposition,
    expected_torus_dim,
    maximal_root,
    table1,
)


@pytest.mark.parametrize(
    ("letter", "rank", "count", "highest"),
    [
        ("A", 2, 3, (1, 1)),
        ("A", 4, 10, (1, 1, 1, 1)),
        ("C", 2, 4, (2, 1)),
        ("G", 2, 6, (3, 2)),
        ("D", 5, 20, (1, 2, 2, 1, 1)),
    ],
)
def test_positive_roots_and_highest_root(
    letter: str, rank: int, count: int, highest: tuple
) -> None:
    rs = build_root_system(letter, rank)
    assert len(rs.positive_roots) == count
    assert maximal_root(rs) == highest
    assert set(rs.positive_roots[:rank]) == set(rs.simple_roots)


def test_c2_numbering_puts_the_short_root_first() -> None:
    rs = build_root_system("c", 2)
    assert rs.type_letter == "C"
    assert rs.squared_lengths[0] < rs.squared_lengths[1]


@pytest.mark.parametrize(
    ("letter", "rank"), [("C", 1), ("B", 1), ("D", 3), ("E", 5), ("Q", 3)]
)
def test_invalid_root_system_is_rejected(letter: str, rank: int) -> None:
    with pytest.raises(InvalidRootSystemError):
        build_root_system(letter, rank)


def test_c2_diagram_decomposition() -> None:
    decomposition = diagram_joyce_decomposition("C", 2)
    assert decomposition.to_json() == {
        "type": "C",
        "rank": 2,
        "layers": [{"d": 1, "f_hdim": 1}, {"d": 2, "f_hdim": 0}],
        "b_dim": 0,
        "ell": 2,
        "trivial_f": 1,
    }
    assert decomposition.algebra_dim == 10


def test_a4_diagram_decomposition() -> None:
    decomposition = diagram_joyce_decomposition("A", 4)
    assert decomposition.f_hdims == [3, 1]
    assert decomposition.b_dim == 2
    assert decomposition.ell == 0
    assert decomposition.algebra_dim == 24


def test_exceptional_diagrams() -> None:
    e7 = diagram_joyce_decomposition("E", 7)
    assert e7.trivial_f_count == 4
    assert e7.ell == 7
    assert e7.algebra_dim == 133
    e8 = diagram_joyce_decomposition("E", 8)
    assert e8.algebra_dim == 248
    assert e8.ell == 8


def test_every_table_row_matches_its_closed_form() -> None:
    rows = table1(8)
    assert rows
    mismatched = [row.group for row in rows if not row.matches]
    assert mismatched == []
    groups = {row.group for row in rows}
    assert {"SU(9)", "SO(17)", "SP(8)", "SO(16)", "E8", "G2"} <= groups


@pytest.mark.parametrize(
    ("family", "n", "trivial", "torus"),
    [
        ("so", 8, 3, 4),
        ("so", 12, 4, 6),
        ("so", 10, 2, 3),
        ("su", 6, 1, 1),
        ("su", 5, 0, 0),
        ("sp", 3, 1, 3),
        ("so", 9, 2, 4),
        ("so", 11, 3, 5),
        ("e7", 7, 4, 7),
        ("e8", 8, 4, 8),
    ],
)
def test_closed_forms(family: str, n: int, trivial: int, torus: int) -> None:
    assert closed_form_trivial_count(family, n) == trivial
    assert expected_torus_dim(family, n) == torus


def test_g2_compact_form() -> None:
    realization = chevalley_compact_form(build_root_system("G", 2))
    g = realization.algebra
    assert realization.dim == 14
    assert g.verify_jacobi().passed
    assert is_positive_definite(g.killing_form())
    assert not g.center()


@pytest.mark.parametrize(
    ("family", "n"), [("sp", 2), ("su", 4), ("so", 7)]
)
def test_realized_decomposition_agrees_with_diagram(
    family: str, n: int
) -> None:
    spec = GroupSpec.parse(family, n)
    realized = decomposition_for(spec)
    diagram = spec.table_row().decomposition
    assert realized.m == diagram.m
    assert realized.f_hdims == diagram.f_hdims
    assert realized.b_dim == diagram.b_dim
    assert realized.ell == diagram.ell == spec.ell
    assert realized.dim == 4 * realized.quaternionic_dim
