from __future__ import annotations

import pytest

from obatalab.joyce import swap_layers
from obatalab.types import CheckFailure, VerifyResult
from obatalab.verification import (
    CHECK_NAMES,
    LemmaCheck,
    SuiteContext,
    build_check,
    run_lemma_suite,
)


class AlwaysFails(LemmaCheck):
    name = "always_fails"

    def run(self, ctx: SuiteContext) -> VerifyResult:
        return VerifyResult.from_failures(
            self.name, [CheckFailure(self.name, (0,), "forced")], checked=1
        )


@pytest.mark.parametrize("ctx_name", ["sp2_ctx", "hopf_ctx", "su3_ctx"])
def test_full_suite_passes(
    ctx_name: str, request: pytest.FixtureRequest
) -> None:
    ctx: SuiteContext = request.getfixturevalue(ctx_name)
    result = run_lemma_suite(ctx)
    assert result.failed == []
    assert result.passed
    assert list(result.results) == list(CHECK_NAMES)
    assert result.combined().passed


def test_suite_reports_a_perturbed_connection(sp2_ctx: SuiteContext) -> None:
    broken = SuiteContext(
        decomposition=sp2_ctx.decomposition,
        triple=sp2_ctx.triple,
        connection=sp2_ctx.connection.with_perturbed_entry(0, 0, 1),
    )
    result = run_lemma_suite(broken, ["torsion_free", "integrability"])
    assert result.failed == ["torsion_free"]
    payload = result.to_json()
    assert payload["torsion_free"]["passed"] is False
    assert payload["torsion_free"]["failures"][0]["indices"] == [0, 1]


def test_suite_reports_swapped_layers(sp2_ctx: SuiteContext) -> None:
    swapped = SuiteContext(
        decomposition=swap_layers(sp2_ctx.decomposition, 0, 1),
        triple=sp2_ctx.triple,
        connection=sp2_ctx.connection,
    )
    result = run_lemma_suite(swapped, ["joyce_relations"])
    assert not result.passed


def test_suite_accepts_check_objects(hopf_ctx: SuiteContext) -> None:
    result = run_lemma_suite(hopf_ctx, [AlwaysFails(), "jacobi"])
    assert result.failed == ["always_fails"]
    assert result.results["jacobi"].passed


def test_unknown_check_name() -> None:
    with pytest.raises(ValueError, match="Unknown lemma check"):
        build_check("pythagoras")
    assert build_check("bianchi").name == "bianchi"
