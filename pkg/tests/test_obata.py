from __future__ import annotations

from typing import Dict, List

import pytest

from obatalab.catalog import GroupSpec, connection_for, structure_for
from obatalab.core.matrix import ExactMatrix
from obatalab.core.span import SpanBasis
from obatalab.exceptions import DimensionCapError, NotHypercomplexError
from obatalab.geometry import obata_ricci
from obatalab.joyce import swap_frame_columns
from obatalab.obata import (
    EndomorphismTensor,
    connection_form,
    covariant_derivative,
    curvature,
    euler_field,
    find_parallel_subspaces,
    holonomy_algebra,
    is_block_lower_triangular,
    is_lie_closed,
    obata_connection,
    verify_bianchi,
    verify_euler_field,
    verify_nabla_e1,
    verify_parallel_structures,
    verify_reduction_consistency,
    verify_torsion_free,
)
from obatalab.obata.connection import Connection, dual_labels
from obatalab.verification import SuiteContext

# (sign, dual index) of entry (r, c) inside one quaternionic 4-block
PATTERN = [
    [("-", 1), ("+", 2), ("+", 3), ("+", 4)],
    [("-", 2), ("-", 1), ("-", 4), ("+", 3)],
    [("-", 3), ("+", 4), ("-", 1), ("-", 2)],
    [("-", 4), ("-", 3), ("+", 2), ("-", 1)],
]
# the psi^1 block above the diagonal of sp(2) has its own signs
UPPER_PSI = [
    [("+", 1), ("+", 2), ("+", 3), ("+", 4)],
    [("-", 2), ("+", 1), ("-", 4), ("+", 3)],
    [("-", 3), ("+", 4), ("+", 1), ("-", 2)],
    [("-", 4), ("-", 3), ("+", 2), ("+", 1)],
]

# curvature generators of sp(2), one signed sum of duals per e^2_k
TAUS = [
    ["+phi^1_2 -phi^2_2", "+phi^2_1 -phi^1_1",
     "+phi^2_4 -phi^1_4", "+phi^1_3 -phi^2_3"],
    ["+phi^1_3 -phi^2_3", "+phi^1_4 -phi^2_4",
     "+phi^2_1 -phi^1_1", "+phi^2_2 -phi^1_2"],
    ["+phi^1_4 -phi^2_4", "+phi^2_3 -phi^1_3",
     "+phi^1_2 -phi^2_2", "+phi^2_1 -phi^1_1"],
    ["+psi^1_1", "+psi^1_2", "+psi^1_3", "+psi^1_4"],
    ["+psi^1_2", "-psi^1_1", "-psi^1_4", "+psi^1_3"],
    ["+psi^1_3", "+psi^1_4", "-psi^1_1", "-psi^1_2"],
    ["+psi^1_4", "-psi^1_3", "+psi^1_2", "-psi^1_1"],
]
# nabla_{e^1_k} applied to the first generator, k = 1..4
NUS = [
    ["+phi^1_2", "-phi^1_1", "-phi^1_4", "+phi^1_3"],
    ["+phi^1_1", "+phi^1_2", "+phi^1_3", "+phi^1_4"],
    ["-phi^1_4", "+phi^1_3", "-phi^1_2", "+phi^1_1"],
    ["+phi^1_3", "+phi^1_4", "-phi^1_1", "-phi^1_2"],
]


def _signed(sign: str, weight: int = 1) -> str:
    return str(weight if sign == "+" else -weight)


def _expected_block(prefix: str, r: int, c: int) -> Dict[str, str]:
    sign, index = PATTERN[r][c]
    return {f"{prefix}_{index}": _signed(sign)}


def _expected_sp2_form() -> List[List[Dict[str, str]]]:
    form: List[List[Dict[str, str]]] = [
        [{} for _ in range(12)] for _ in range(12)
    ]
    for r in range(4):
        for c in range(4):
            sign, index = PATTERN[r][c]
            upper_sign, upper_index = UPPER_PSI[r][c]
            middle = "phi^1" if index == 1 else "phi^2"
            form[r][c] = _expected_block("phi^1", r, c)
            form[r][4 + c] = {f"psi^1_{upper_index}": _signed(upper_sign)}
            form[4 + r][c] = _expected_block("psi^1", r, c)
            form[4 + r][4 + c] = {f"{middle}_{index}": _signed(sign)}
            form[8 + r][4 + c] = {
                f"psi^1_{index}": _signed(sign, 3 if index == 1 else 1)
            }
            form[8 + r][8 + c] = _expected_block("phi^2", r, c)
    return form


def _tensor(c: Connection, targets: List[str]) -> ExactMatrix:
    """sum_k alpha_k (x) e^2_k as a frame matrix."""

    labels = list(c.algebra.labels)
    duals = dual_labels(labels)
    rows = [[0] * c.dim for _ in range(c.dim)]
    for k, terms in enumerate(targets, start=1):
        row = labels.index(f"e^2_{k}")
        for term in terms.split():
            rows[row][duals.index(term[1:])] += 1 if term[0] == "+" else -1
    return ExactMatrix(rows)


def test_obata_connection_identities(sp2_ctx: SuiteContext) -> None:
    c = sp2_ctx.connection
    assert verify_torsion_free(c).passed
    assert verify_parallel_structures(c).passed
    assert verify_nabla_e1(c).passed
    assert verify_euler_field(c).passed
    assert euler_field(c)[0] == -1
    assert euler_field(c)[8] == -1
    assert not any(euler_field(c)[1:8])


def test_perturbed_connection_has_torsion(sp2_ctx: SuiteContext) -> None:
    broken = sp2_ctx.connection.with_perturbed_entry(0, 0, 1)
    result = verify_torsion_free(broken)
    assert not result.passed
    assert result.first_failure is not None
    assert result.first_failure.indices == (0, 1)


def test_non_integrable_triple_is_refused(sp2: GroupSpec) -> None:
    triple = swap_frame_columns(structure_for(sp2), 0, 4)
    with pytest.raises(NotHypercomplexError):
        obata_connection(triple.algebra, triple)


def test_sp2_connection_form_matches_the_worked_example(
    sp2_ctx: SuiteContext,
) -> None:
    theta = connection_form(sp2_ctx.connection)
    expected = _expected_sp2_form()
    mismatches = [
        (r, s)
        for r in range(12)
        for s in range(12)
        if theta[r][s] != expected[r][s]
    ]
    assert mismatches == []


def test_sp2_curvature_spans_seven_generators(sp2_ctx: SuiteContext) -> None:
    c = sp2_ctx.connection
    curvature_span = SpanBasis(c.dim * c.dim)
    curvature_span.extend(curvature(c).values())
    generators = [_tensor(c, targets) for targets in TAUS]
    assert curvature_span.dim == 7
    assert all(curvature_span.contains(tau) for tau in generators)
    assert not curvature_span.extend(generators)


def test_sp2_derivatives_of_the_first_generator(
    sp2_ctx: SuiteContext,
) -> None:
    c = sp2_ctx.connection
    labels = list(c.algebra.labels)
    tau1 = _tensor(c, TAUS[0])
    holonomy = holonomy_algebra(c)
    for k, targets in enumerate(NUS, start=1):
        nabla_k = c.nabla[labels.index(f"e^1_{k}")]
        nu = _tensor(c, targets)
        assert nabla_k.commutator(tau1) == nu
        assert holonomy.basis.contains(nu)


def test_curvature_and_bianchi(
    sp2_ctx: SuiteContext, hopf_ctx: SuiteContext
) -> None:
    tensor = curvature(sp2_ctx.connection)
    assert not tensor.is_flat()
    assert verify_bianchi(tensor).passed
    assert tensor.value(3, 1) == -tensor.value(1, 3)
    assert curvature(hopf_ctx.connection).is_flat()


def test_structures_are_covariantly_constant(sp2_ctx: SuiteContext) -> None:
    c = sp2_ctx.connection
    for matrix in (c.triple.I, c.triple.J, c.triple.K):
        derived = covariant_derivative(c, EndomorphismTensor.constant(matrix))
        assert derived.order == 1
        assert derived.is_zero()


def test_sp2_holonomy(sp2_ctx: SuiteContext) -> None:
    result = holonomy_algebra(sp2_ctx.connection, check_lie_closure=True)
    assert result.filtration_dims == [7, 11, 11]
    assert result.dim == 11
    assert result.stabilized
    assert result.stabilization_depth == 1
    assert result.lie_closed is True
    blocks = result.block_report
    assert blocks is not None
    assert blocks.quaternionic
    assert blocks.nonzero_rows == [2]
    assert blocks.kind(2, 2) == "imaginary"
    assert blocks.kind(2, 0) == "general"
    assert blocks.kind(2, 1) == "general"
    assert result.trace_check()["traceless"] is True


@pytest.mark.parametrize(
    ("ctx_name", "dim"), [("sp2_ctx", 11), ("su3_ctx", 16), ("hopf_ctx", 0)]
)
def test_holonomy_methods_agree(
    ctx_name: str, dim: int, request: pytest.FixtureRequest
) -> None:
    ctx: SuiteContext = request.getfixturevalue(ctx_name)
    filtration = holonomy_algebra(ctx.connection)
    closure = holonomy_algebra(ctx.connection, method="alekseevskii")
    assert closure.dim == filtration.dim == dim
    assert closure.basis == filtration.basis
    assert is_lie_closed(closure)
    ricci_flat = obata_ricci(None, ctx.triple).is_zero()
    assert filtration.trace_check()["traceless"] is ricci_flat


def test_flat_hopf_holonomy(hopf_ctx: SuiteContext) -> None:
    result = holonomy_algebra(hopf_ctx.connection)
    assert result.filtration_dims == [0, 0]
    assert result.dim == 0
    assert result.stabilized


def test_su3_holonomy_reaches_the_quaternionic_bound(
    su3_ctx: SuiteContext,
) -> None:
    result = holonomy_algebra(su3_ctx.connection)
    assert result.quaternionic_bound == 16
    assert result.dim == 16
    assert result.filtration_dims[-1] == 16
    assert result.stabilization_depth == 4
    assert result.trace_check()["traceless"] is False


def test_holonomy_json_marks_published_values(sp2_ctx: SuiteContext) -> None:
    payload = holonomy_algebra(sp2_ctx.connection).to_json(reference=[7, 11])
    assert payload["filtration"] == [7, 11, 11]
    assert payload["filtration_status"] == [
        "published",
        "published",
        "unverified-by-paper",
    ]
    assert payload["bound"] == 36
    assert payload["depth"] == 2
    assert payload["stabilized"] is True


def test_holonomy_rejects_bad_arguments(sp2_ctx: SuiteContext) -> None:
    with pytest.raises(DimensionCapError):
        holonomy_algebra(sp2_ctx.connection, dim_cap=8)
    with pytest.raises(ValueError):
        holonomy_algebra(sp2_ctx.connection, method="ambrose")
    with pytest.raises(ValueError):
        holonomy_algebra(sp2_ctx.connection, max_depth=0)


def test_sp2_has_a_parallel_h2(sp2_ctx: SuiteContext) -> None:
    report = find_parallel_subspaces(sp2_ctx.connection)
    h2 = report.find("h2")
    assert h2 is not None
    assert h2.parallel
    assert h2.proper
    assert not report.irreducible
    holonomy = holonomy_algebra(sp2_ctx.connection)
    assert verify_reduction_consistency(holonomy, h2).passed


def test_hopf_is_irreducible(hopf_ctx: SuiteContext) -> None:
    report = find_parallel_subspaces(hopf_ctx.connection)
    assert report.proper_parallel == []
    assert report.irreducible


@pytest.mark.parametrize(
    ("A", "parallel"), [("1,0;2,-1", True), ("0,1;1,0", False)]
)
def test_su5_tail_depends_on_the_parameters(
    su5: GroupSpec, A: str, parallel: bool
) -> None:
    report = find_parallel_subspaces(connection_for(su5, A))
    tail = report.find("tail2")
    assert tail is not None
    assert tail.dim == 8
    assert tail.parallel is parallel
    assert report.irreducible is not parallel


def test_block_lower_triangular_parameters(su5: GroupSpec) -> None:
    lower = structure_for(su5, "1,0;2,-1").parameters.entries
    swapped = structure_for(su5, "0,1;1,0").parameters.entries
    assert is_block_lower_triangular(lower)
    assert not is_block_lower_triangular(swapped)


@pytest.mark.slow
def test_su5_holonomy_filtration(su5: GroupSpec) -> None:
    result = holonomy_algebra(connection_for(su5, "0,1;1,0"), workers=2)
    assert result.filtration_dims == [52, 138, 144]
    assert result.dim == 144
    assert result.dim == result.quaternionic_bound


@pytest.mark.slow
@pytest.mark.parametrize("A", ["1,0;2,-1", "1,0;0,1", "2,0;1,3"])
def test_su5_lower_triangular_holonomy_is_reducible(
    su5: GroupSpec, A: str
) -> None:
    c = connection_for(su5, A)
    filtration = holonomy_algebra(c, workers=2)
    closure = holonomy_algebra(c, method="alekseevskii", workers=2)
    assert filtration.filtration_dims == [48, 72, 94, 110, 112, 112]
    assert filtration.dim == closure.dim == 112
    assert filtration.basis == closure.basis
    ricci_flat = obata_ricci(None, c.triple).is_zero()
    assert filtration.trace_check()["traceless"] is ricci_flat
    labels = [s.label for s in find_parallel_subspaces(c).proper_parallel]
    assert labels == ["tail2", "closure(h2)"]
