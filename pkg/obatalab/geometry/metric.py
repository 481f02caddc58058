"""Bi-invariant metrics extending the Killing form across the torus."""

from __future__ import annotations

import logging

from dataclasses import dataclass
from typing import Dict, List, Optional, Sequence, Union

from obatalab.core.lie import LieAlgebraData, is_positive_definite
from obatalab.core.matrix import ExactMatrix
from obatalab.core.rational import (
    ZERO,
    Rational,
    RationalLike,
    format_rational,
    to_rational,
)
from obatalab.exceptions import DimensionMismatchError, IncompatibleMetricError
from obatalab.joyce.decomposition import JoyceDecomposition
from obatalab.joyce.hypercomplex import (
    STRUCTURE_NAMES,
    HypercomplexTriple,
    ParameterMatrix,
)
from obatalab.types import CheckFailure, VerifyResult

LOGGER = logging.getLogger(__name__)


@dataclass(frozen=True)
class InvariantMetric:
    """Killing form on the semisimple part plus a diagonal torus block.

    ``gram`` is written on the ambient basis, ``frame_gram`` on the
    hypercomplex frame of ``parameters``; ``lambdas`` holds lambda_j^2.
    """

    gram: ExactMatrix
    frame_gram: ExactMatrix
    lambdas: List[Rational]
    parameters: ParameterMatrix

    def to_json(self) -> Dict[str, object]:
        return {
            "lambdas": [format_rational(value) for value in self.lambdas],
            "gram": self.gram.to_json(),
            "frame_gram": self.frame_gram.to_json(),
        }


def _norm(gram: ExactMatrix, vector: Sequence[Rational]) -> Rational:
    image = gram.apply(vector)
    return sum((a * b for a, b in zip(vector, image)), ZERO)


def _torus_block(
    ell: int,
    lambdas: Sequence[Rational],
    torus_lambdas: Optional[Sequence[RationalLike]],
) -> List[Rational]:
    if torus_lambdas is None:
        return list(lambdas[:ell])
    values = [to_rational(value) for value in torus_lambdas]
    if len(values) != ell:
        raise DimensionMismatchError(
            f"Expected {ell} torus norms, got {len(values)}"
        )
    if any(value <= 0 for value in values):
        raise IncompatibleMetricError("Torus norms must be positive")
    return values


def _compatibility_failures(
    frame_gram: ExactMatrix, e1: Sequence[int], lambdas: Sequence[Rational]
) -> List[CheckFailure]:
    failures: List[CheckFailure] = []
    for a, i in enumerate(e1):
        for b, j in enumerate(e1):
            expected = lambdas[a] if a == b else ZERO
            if frame_gram[i, j] != expected:
                failures.append(
                    CheckFailure(
                        "compatibility",
                        (a, b),
                        f"g(e1^{a + 1}, e1^{b + 1}) = "
                        f"{format_rational(frame_gram[i, j])}, expected "
                        f"{format_rational(expected)}",
                    )
                )
    return failures


def extend_killing_metric(
    d: JoyceDecomposition,
    torus_lambdas: Optional[Sequence[RationalLike]] = None,
    *,
    parameters: Union[ParameterMatrix, ExactMatrix, str, None] = None,
) -> InvariantMetric:
    """g = B on the semisimple part, diag(torus_lambdas) on the torus.

    lambda_j^2 = B(e2^j, e2^j). The default torus norms are the first
    ell of these, which makes e1^j = z_j compatible for A = Id.
    """

    params = ParameterMatrix.coerce(parameters, d.m)
    killing = d.ambient.killing_form()
    lambdas = [_norm(killing, layer.e2) for layer in d.layers]
    torus = _torus_block(d.ell, lambdas, torus_lambdas)
    rows = killing.to_rows()
    for t, value in enumerate(torus):
        rows[t][t] = value
    gram = ExactMatrix(rows)
    if not is_positive_definite(gram):
        raise IncompatibleMetricError("Extended form is not positive definite")
    frame = d.frame(params.entries)
    frame_gram = frame.transpose() @ gram @ frame
    e1 = [start for start, _ in d.layer_slices()]
    failures = _compatibility_failures(frame_gram, e1, lambdas)
    if failures:
        LOGGER.info("Killing extension incompatible: %s", failures[0].message)
        raise IncompatibleMetricError(
            f"Parameter matrix violates the compatibility condition on "
            f"{d.label}: {failures[0].message}"
        )
    LOGGER.debug("Killing extension with lambda^2 = %s", lambdas)
    return InvariantMetric(
        gram=gram,
        frame_gram=frame_gram,
        lambdas=lambdas,
        parameters=params,
    )


def verify_bi_invariance(
    g: LieAlgebraData, gram: ExactMatrix
) -> VerifyResult:
    """g([x,y],z) + g(y,[x,z]) = 0, i.e. ad_x^T G + G ad_x = 0."""

    failures: List[CheckFailure] = []
    for x, ad in enumerate(g.ad_basis):
        if not (ad.transpose() @ gram + gram @ ad).is_zero():
            failures.append(
                CheckFailure("bi_invariance", (x,), "ad_x is not skew")
            )
    return VerifyResult.from_failures(
        "bi_invariance", failures, checked=g.dim
    )


def verify_hyperhermitian(
    h: HypercomplexTriple, metric: InvariantMetric
) -> VerifyResult:
    """g(L x, L y) = g(x, y) for L in I, J, K."""

    failures: List[CheckFailure] = []
    gram = metric.frame_gram
    for index, name in enumerate(STRUCTURE_NAMES):
        L = h.structure(name)
        if L.transpose() @ gram @ L != gram:
            failures.append(
                CheckFailure(
                    "hyperhermitian", (index,), f"{name} is not isometric"
                )
            )
    return VerifyResult.from_failures(
        "hyperhermitian", failures, checked=len(STRUCTURE_NAMES)
    )


__all__ = [
    "InvariantMetric",
    "extend_killing_metric",
    "verify_bi_invariance",
    "verify_hyperhermitian",
]
