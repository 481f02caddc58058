from __future__ import annotations

import pytest

from obatalab.catalog import GroupSpec, decomposition_for, structure_for
from obatalab.exceptions import DimensionMismatchError, SingularParameterError
from obatalab.joyce import (
    ParameterMatrix,
    hyperholomorphic_check,
    quaternion_relations,
    swap_frame_columns,
    swap_layers,
    verify_bracket_inclusions,
    verify_integrability,
    verify_joyce_relations,
)


def test_sp2_decomposition_shape(sp2: GroupSpec) -> None:
    d = decomposition_for(sp2)
    assert d.dim == 12
    assert d.ell == 2
    assert d.m == 2
    assert d.f_hdims == [1, 0]
    assert d.layer_slices() == [(0, 8), (8, 12)]
    assert d.frame_labels()[:5] == [
        "e^1_1",
        "e^1_2",
        "e^1_3",
        "e^1_4",
        "f^1_1",
    ]
    assert d.frame_labels()[8] == "e^2_1"


def test_su5_decomposition_shape(su5: GroupSpec) -> None:
    d = decomposition_for(su5)
    assert d.dim == 24
    assert d.ell == 0
    assert d.f_hdims == [3, 1]
    assert d.b_dim == 2


@pytest.mark.parametrize("family,n", [("sp", 2), ("su", 3), ("su", 5)])
def test_joyce_relations_and_inclusions_hold(family: str, n: int) -> None:
    d = decomposition_for(GroupSpec.parse(family, n))
    relations = verify_joyce_relations(d)
    assert relations.passed, relations.failures
    inclusions = verify_bracket_inclusions(d)
    assert inclusions.passed, inclusions.failures


def test_swapping_layers_breaks_the_recursion(sp2: GroupSpec) -> None:
    swapped = swap_layers(decomposition_for(sp2), 0, 1)
    result = verify_joyce_relations(swapped)
    assert not result.passed
    assert result.details["parts"]["J3"] is False


@pytest.mark.parametrize("A", [None, "1,1;0,1", "0,1;1,0", "2,0;0,-1/2"])
def test_structure_is_quaternionic_and_integrable(
    sp2: GroupSpec, A: str | None
) -> None:
    triple = structure_for(sp2, A)
    assert all(quaternion_relations(triple).values())
    assert verify_integrability(triple).passed


def test_frame_is_block_quaternionic(hopf: GroupSpec) -> None:
    triple = structure_for(hopf)
    assert triple.dim == 4
    assert triple.n == 1
    # I e1 = e2 and J e1 = e3 on frame coordinates
    assert triple.I.column(0) == (0, 1, 0, 0)
    assert triple.J.column(0) == (0, 0, 1, 0)
    assert triple.K.column(0) == (0, 0, 0, 1)
    assert triple.e1_indices() == [0]


def test_hyperholomorphic_directions(
    sp2: GroupSpec, su3: GroupSpec
) -> None:
    for spec in (sp2, su3):
        d = decomposition_for(spec)
        assert hyperholomorphic_check(d, structure_for(spec)).passed


def test_swapped_frame_column_breaks_integrability(sp2: GroupSpec) -> None:
    triple = swap_frame_columns(structure_for(sp2), 0, 4)
    relations = quaternion_relations(triple)
    assert not relations["IJ=K"]
    result = verify_integrability(triple)
    assert not result.passed
    assert result.details["parts"]["quaternion"] is False


def test_parameter_matrix_parsing() -> None:
    A = ParameterMatrix.parse("0,1;1,0")
    assert A.m == 2
    assert A.to_json() == [["0", "1"], ["1", "0"]]
    assert ParameterMatrix.coerce(None, 3) == ParameterMatrix.identity(3)
    with pytest.raises(SingularParameterError):
        ParameterMatrix.parse("1,2;2,4")
    with pytest.raises(DimensionMismatchError):
        ParameterMatrix.parse("1,0,0;0,1,0")


def test_parameter_matrix_must_match_layer_count(sp2: GroupSpec) -> None:
    with pytest.raises(DimensionMismatchError):
        structure_for(sp2, "1")
    with pytest.raises(SingularParameterError):
        structure_for(sp2, "1,1;1,1")
