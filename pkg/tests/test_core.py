from __future__ import annotations

import pytest

from obatalab.core.lie import LieAlgebraData, abelian, is_positive_definite
from obatalab.core.matrix import ExactMatrix, rank
from obatalab.core.rational import (
    QQ,
    format_rational,
    parse_rational_matrix,
    to_rational,
)
from obatalab.core.span import SpanBasis, span_insert, span_of
from obatalab.exceptions import DimensionMismatchError, SingularParameterError


def _so3() -> LieAlgebraData:
    return LieAlgebraData(
        3,
        {(0, 1): {2: 1}, (1, 2): {0: 1}, (2, 0): {1: 1}},
        ["x", "y", "z"],
    )


def test_rationals_parse_and_format() -> None:
    assert to_rational("-3/4") == QQ(-3, 4)
    assert to_rational(6) == QQ(6)
    assert format_rational(QQ(6, 4)) == "3/2"
    assert format_rational(QQ(-2, 1)) == "-2"
    assert parse_rational_matrix("0,1;1/2,-3") == [
        [QQ(0), QQ(1)],
        [QQ(1, 2), QQ(-3)],
    ]


def test_parse_rational_matrix_rejects_ragged_rows() -> None:
    with pytest.raises(DimensionMismatchError):
        parse_rational_matrix("1,2;3")
    with pytest.raises(ValueError):
        parse_rational_matrix(" ")


def test_matrix_determinant_inverse_and_rank() -> None:
    m = ExactMatrix([[1, 2], [3, 4]])
    assert m.det() == QQ(-2)
    assert m @ m.inverse() == ExactMatrix.identity(2)
    assert ExactMatrix([["1/2", 0], [0, 4]]).det() == QQ(2)
    assert ExactMatrix([[0, 1], [1, 0]]).det() == QQ(-1)
    assert rank(ExactMatrix([[1, 2], [2, 4]])) == 1
    assert rank(ExactMatrix.identity(3)) == 3
    with pytest.raises(SingularParameterError):
        ExactMatrix([[1, 2], [2, 4]]).inverse()


def test_matrix_nullspace_and_commutator() -> None:
    m = ExactMatrix([[1, 2, 3], [2, 4, 6]])
    kernel = m.nullspace()
    assert len(kernel) == 2
    for vector in kernel:
        assert not any(m.apply(vector))
    a = ExactMatrix([[0, 1], [0, 0]])
    b = ExactMatrix([[0, 0], [1, 0]])
    assert a.commutator(b) == ExactMatrix.diagonal([1, -1])
    assert ExactMatrix.from_flat(a.flatten(), 2, 2) == a
    assert a.to_json() == [["0", "1"], ["0", "0"]]


def test_span_basis_is_independent_of_insertion_order() -> None:
    vectors = [(1, 1, 0), (0, 1, 1), (1, 2, 1)]
    forward = span_of(vectors, 3)
    backward = span_of(list(reversed(vectors)), 3)
    assert forward.dim == 2
    assert forward == backward
    assert forward.contains((2, 3, 1))
    assert not forward.contains((0, 0, 1))
    coords = forward.coordinates((2, 3, 1))
    assert set(coords) <= set(forward.pivots)


def test_span_insert_reports_growth() -> None:
    basis = SpanBasis(2)
    basis, grew = span_insert(basis, (1, 0))
    assert grew
    basis, grew = span_insert(basis, (3, 0))
    assert not grew
    with pytest.raises(DimensionMismatchError):
        basis.insert((1, 2, 3))
    with pytest.raises(ValueError):
        basis.coordinates((0, 1))


def test_lie_algebra_brackets_and_killing_form() -> None:
    g = _so3()
    assert g.bracket(g.unit(1), g.unit(0)) == (0, 0, -1)
    assert g.verify_jacobi().passed
    assert g.killing_form() == ExactMatrix.diagonal([2, 2, 2])
    assert is_positive_definite(g.killing_form())
    assert not g.center()


def test_torus_summand_is_central() -> None:
    g = _so3().with_torus(2)
    assert g.dim == 5
    assert g.labels[:2] == ("z1", "z2")
    assert len(g.center()) == 2
    assert abelian(3).killing_form().is_zero()


def test_perturbed_constant_breaks_jacobi() -> None:
    broken = _so3().with_perturbed_constant(0, 1, 0)
    result = broken.verify_jacobi()
    assert not result.passed
    assert result.first_failure is not None
    assert result.first_failure.indices == (0, 1, 2)


def test_change_basis_preserves_jacobi() -> None:
    g = _so3()
    basis = ExactMatrix([[1, 1, 0], [0, 1, 0], [0, 0, 2]])
    h = g.change_basis(basis)
    assert h.verify_jacobi().passed
    x, y = basis.column(0), basis.column(1)
    image = basis.apply(h.bracket(h.unit(0), h.unit(1)))
    assert image == g.bracket(x, y)
