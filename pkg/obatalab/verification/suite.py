"""Run the structural lemma checks on one constructed example."""

from __future__ import annotations

import logging

from dataclasses import dataclass
from typing import Dict, Optional, Sequence, Union

from obatalab.catalog import (
    GroupSpec,
    connection_for,
    decomposition_for,
    structure_for,
)
from obatalab.joyce.hypercomplex import ParameterMatrix
from obatalab.types import VerifyResult
from obatalab.verification.base import LemmaCheck, SuiteContext
from obatalab.verification.checks import build_check, default_checks

LOGGER = logging.getLogger(__name__)


@dataclass
class SuiteResult:
    results: Dict[str, VerifyResult]

    @property
    def passed(self) -> bool:
        return all(result.passed for result in self.results.values())

    @property
    def failed(self) -> list[str]:
        return [name for name, r in self.results.items() if not r.passed]

    def combined(self) -> VerifyResult:
        return VerifyResult.combine("lemma_suite", self.results)

    def to_json(self) -> Dict[str, object]:
        return {
            name: result.to_dict() for name, result in self.results.items()
        }


def context_for(
    spec: GroupSpec,
    parameters: Union[ParameterMatrix, str, None] = None,
) -> SuiteContext:
    triple = structure_for(spec, parameters)
    return SuiteContext(
        decomposition=decomposition_for(spec),
        triple=triple,
        connection=connection_for(spec, triple.parameters),
    )


def run_lemma_suite(
    ctx: SuiteContext,
    checks: Optional[Sequence[Union[str, LemmaCheck]]] = None,
) -> SuiteResult:
    """Evaluate ``checks`` (all of them by default) in order."""

    selected = (
        default_checks()
        if checks is None
        else [
            build_check(item) if isinstance(item, str) else item
            for item in checks
        ]
    )
    results: Dict[str, VerifyResult] = {}
    for check in selected:
        result = check.run(ctx)
        results[check.name] = result
        if not result.passed:
            LOGGER.warning(
                "Lemma check %s failed: %s",
                check.name,
                result.first_failure,
            )
    LOGGER.info(
        "Lemma suite on %s: %s/%s passed",
        ctx.decomposition.label,
        sum(1 for r in results.values() if r.passed),
        len(results),
    )
    return SuiteResult(results)


__all__ = ["SuiteResult", "context_for", "run_lemma_suite"]
