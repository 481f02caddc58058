from __future__ import annotations

import pytest

from obatalab.core.lie import LieAlgebraData
from obatalab.core.matrix import ExactMatrix
from obatalab.exceptions import (
    DimensionCapError,
    DimensionMismatchError,
    IncompatibleMetricError,
    NotARepresentationError,
)
from obatalab.geometry import (
    HyperhermitianData,
    LeftInvariantForm,
    ce_differential,
    check_twisted_cy,
    extend_killing_metric,
    hyperhermitian_data,
    is_closed,
    lee_form,
    obata_one_form,
    obata_ricci,
    pullback,
    semidirect_hkt,
    standard_sp1_representation,
    verify_bi_invariance,
    verify_hyperhermitian,
    verify_one_form_independence,
    verify_ricci_is_d_eta,
    verify_twisted_cy,
    wedge,
)
from obatalab.geometry.semidirect import block_diagonal
from obatalab.verification import SuiteContext


def _so3() -> LieAlgebraData:
    return LieAlgebraData(3, {(0, 1): {2: 1}, (1, 2): {0: 1}, (2, 0): {1: 1}})


def test_wedge_is_graded_antisymmetric() -> None:
    e0, e1 = LeftInvariantForm.dual(0), LeftInvariantForm.dual(1)
    assert e1.wedge(e0) == -e0.wedge(e1)
    assert e0.wedge(e0).is_zero()
    two = wedge(e0, e1)
    assert two == LeftInvariantForm.build(2, [((1, 0), -1)])
    assert two.evaluate(1, 0) == -1
    assert two.evaluate(0, 1) == 1


def test_differential_of_so3_duals() -> None:
    g = _so3()
    d_e2 = ce_differential(g, LeftInvariantForm.dual(2))
    assert d_e2 == LeftInvariantForm.build(2, [((0, 1), -1)])
    volume = wedge(*(LeftInvariantForm.dual(k) for k in range(3)))
    assert ce_differential(g, volume).is_zero()


def test_differential_squares_to_zero(su3_ctx: SuiteContext) -> None:
    g = su3_ctx.triple.algebra
    for k in range(g.dim):
        once = ce_differential(g, LeftInvariantForm.dual(k))
        assert ce_differential(g, once).is_zero()
    two = wedge(LeftInvariantForm.dual(0), LeftInvariantForm.dual(3))
    assert ce_differential(g, ce_differential(g, two)).is_zero()


def test_pullback_along_a_swap() -> None:
    swap = ExactMatrix([[0, 1], [1, 0]])
    assert pullback(LeftInvariantForm.dual(0), swap) == (
        LeftInvariantForm.dual(1)
    )
    area = wedge(LeftInvariantForm.dual(0), LeftInvariantForm.dual(1))
    assert pullback(area, swap) == -area


def test_killing_extension_on_sp2(sp2_ctx: SuiteContext) -> None:
    d, h = sp2_ctx.decomposition, sp2_ctx.triple
    metric = extend_killing_metric(d)
    assert len(metric.lambdas) == 2
    assert all(value > 0 for value in metric.lambdas)
    assert verify_bi_invariance(d.ambient, metric.gram).passed
    assert verify_hyperhermitian(h, metric).passed
    assert metric.frame_gram[0, 0] == metric.lambdas[0]
    assert metric.frame_gram[8, 8] == metric.lambdas[1]


def test_killing_extension_rejects_bad_torus(sp2_ctx: SuiteContext) -> None:
    d = sp2_ctx.decomposition
    with pytest.raises(DimensionMismatchError):
        extend_killing_metric(d, [1])
    with pytest.raises(IncompatibleMetricError):
        extend_killing_metric(d, [1, -1])


def test_su3_has_no_compatible_killing_extension(
    su3_ctx: SuiteContext,
) -> None:
    with pytest.raises(IncompatibleMetricError):
        extend_killing_metric(su3_ctx.decomposition)


@pytest.mark.parametrize(
    "ctx_name", ["sp2_ctx", "hopf_ctx", "so7_ctx"]
)
def test_lee_form_matches_obata_one_form(
    ctx_name: str, request: pytest.FixtureRequest
) -> None:
    ctx: SuiteContext = request.getfixturevalue(ctx_name)
    metric = extend_killing_metric(ctx.decomposition)
    theta = lee_form(ctx.decomposition, metric)
    assert theta == obata_one_form(None, ctx.triple)
    assert is_closed(ctx.triple.algebra, theta)
    assert obata_ricci(None, ctx.triple).is_zero()


@pytest.mark.parametrize("ctx_name", ["sp2_ctx", "su3_ctx"])
def test_one_form_and_ricci_identities(
    ctx_name: str, request: pytest.FixtureRequest
) -> None:
    ctx: SuiteContext = request.getfixturevalue(ctx_name)
    assert verify_one_form_independence(None, ctx.triple).passed
    assert verify_ricci_is_d_eta(None, ctx.triple).passed
    ricci = obata_ricci(None, ctx.triple)
    assert ricci.is_antisymmetric()


def test_su3_ricci_does_not_vanish(su3_ctx: SuiteContext) -> None:
    h = su3_ctx.triple
    assert not obata_ricci(None, h).is_zero()
    assert not is_closed(h.algebra, obata_one_form(None, h))


@pytest.mark.parametrize("ctx_name", ["sp2_ctx", "hopf_ctx"])
def test_twisted_calabi_yau_holds(
    ctx_name: str, request: pytest.FixtureRequest
) -> None:
    ctx: SuiteContext = request.getfixturevalue(ctx_name)
    metric = extend_killing_metric(ctx.decomposition)
    report = verify_twisted_cy(ctx.decomposition, metric, ctx.triple)
    assert report.compatible
    assert report.hkt and report.strong
    assert report.d_psi and report.dtheta_zero
    assert report.passed
    payload = report.to_json()
    assert payload["dPsi_eq_theta_wedge_Psi"] is True
    assert "reason" not in payload


def test_volume_form_cap(sp2_ctx: SuiteContext) -> None:
    metric = extend_killing_metric(sp2_ctx.decomposition)
    data = hyperhermitian_data(sp2_ctx.decomposition, metric, sp2_ctx.triple)
    assert data.n == 3
    with pytest.raises(DimensionCapError):
        check_twisted_cy(data, psi_cap=2)


def test_twisted_cy_without_a_metric(su3_ctx: SuiteContext) -> None:
    report = verify_twisted_cy(su3_ctx.decomposition, None, su3_ctx.triple)
    assert report.compatible is False
    assert report.dtheta_zero is False
    assert report.hkt is None
    assert not report.passed
    assert report.to_json()["reason"]


def _hopf_base(ctx: SuiteContext) -> HyperhermitianData:
    metric = extend_killing_metric(ctx.decomposition)
    return hyperhermitian_data(ctx.decomposition, metric, ctx.triple)


def test_trivial_semidirect_extension(hopf_ctx: SuiteContext) -> None:
    extension = semidirect_hkt(_hopf_base(hopf_ctx), None, 1)
    assert extension.dim == 8
    assert extension.to_json() == {"base_dim": 4, "r": 1, "dim": 8}
    assert extension.algebra.verify_jacobi().passed
    assert check_twisted_cy(extension.data).passed


def test_standard_sp1_semidirect_extension(hopf_ctx: SuiteContext) -> None:
    rho = standard_sp1_representation(1)
    assert sorted(rho) == [1, 2, 3]
    extension = semidirect_hkt(_hopf_base(hopf_ctx), rho, 1)
    assert extension.algebra.verify_jacobi().passed
    report = check_twisted_cy(extension.data)
    assert report.hkt and report.strong
    assert report.dtheta_zero
    assert report.passed


def test_semidirect_rejects_non_representations(
    sp2_ctx: SuiteContext, hopf_ctx: SuiteContext
) -> None:
    metric = extend_killing_metric(sp2_ctx.decomposition)
    base = hyperhermitian_data(sp2_ctx.decomposition, metric, sp2_ctx.triple)
    with pytest.raises(NotARepresentationError):
        semidirect_hkt(base, standard_sp1_representation(1), 1)
    with pytest.raises(NotARepresentationError):
        semidirect_hkt(
            _hopf_base(hopf_ctx), {1: ExactMatrix.identity(4)}, 1
        )
    with pytest.raises(ValueError):
        semidirect_hkt(_hopf_base(hopf_ctx), None, -1)


def test_block_diagonal() -> None:
    a = ExactMatrix([[1]])
    b = ExactMatrix([[2, 3], [4, 5]])
    assert block_diagonal(a, b) == ExactMatrix(
        [[1, 0, 0], [0, 2, 3], [0, 4, 5]]
    )
