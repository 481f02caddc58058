"""Concrete lemma checks over the joyce, obata and geometry verifiers."""

from __future__ import annotations

from typing import Callable, Dict, List

from obatalab.core.lie import verify_jacobi
from obatalab.geometry.lee import (
    verify_one_form_independence,
    verify_ricci_is_d_eta,
)
from obatalab.joyce.verifiers import (
    hyperholomorphic_check,
    verify_bracket_inclusions,
    verify_integrability,
    verify_joyce_relations,
)
from obatalab.obata.connection import (
    verify_euler_field,
    verify_nabla_e1,
    verify_parallel_structures,
    verify_torsion_free,
)
from obatalab.obata.curvature import verify_bianchi
from obatalab.types import VerifyResult
from obatalab.verification.base import LemmaCheck, SuiteContext

Runner = Callable[[SuiteContext], VerifyResult]


class FunctionCheck(LemmaCheck):
    """Adapts a verifier function to the :class:`LemmaCheck` interface."""

    def __init__(self, name: str, runner: Runner) -> None:
        self.name = name
        self._runner = runner

    def run(self, ctx: SuiteContext) -> VerifyResult:
        return self._runner(ctx)

    def __repr__(self) -> str:
        return f"FunctionCheck({self.name!r})"


_RUNNERS: Dict[str, Runner] = {
    "jacobi": lambda ctx: verify_jacobi(ctx.triple.algebra),
    "joyce_relations": lambda ctx: verify_joyce_relations(ctx.decomposition),
    "bracket_inclusions": lambda ctx: verify_bracket_inclusions(
        ctx.decomposition
    ),
    "hyperholomorphic": lambda ctx: hyperholomorphic_check(
        ctx.decomposition, ctx.triple
    ),
    "integrability": lambda ctx: verify_integrability(ctx.triple),
    "torsion_free": lambda ctx: verify_torsion_free(ctx.connection),
    "parallel_structures": lambda ctx: verify_parallel_structures(
        ctx.connection
    ),
    "nabla_e1": lambda ctx: verify_nabla_e1(ctx.connection),
    "euler": lambda ctx: verify_euler_field(ctx.connection),
    "bianchi": lambda ctx: verify_bianchi(ctx.curvature),
    "eta_independence": lambda ctx: verify_one_form_independence(
        None, ctx.triple
    ),
    "ricci_is_d_eta": lambda ctx: verify_ricci_is_d_eta(None, ctx.triple),
}

CHECK_NAMES = tuple(_RUNNERS)


def build_check(name: str) -> LemmaCheck:
    try:
        runner = _RUNNERS[name]
    except KeyError as exc:
        raise ValueError(
            f"Unknown lemma check '{name}'; expected one of {CHECK_NAMES}"
        ) from exc
    return FunctionCheck(name, runner)


def default_checks() -> List[LemmaCheck]:
    return [build_check(name) for name in CHECK_NAMES]


__all__ = [
    "CHECK_NAMES",
    "FunctionCheck",
    "build_check",
    "default_checks",
]
