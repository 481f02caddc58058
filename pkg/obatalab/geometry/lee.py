"""Obata 1-form, Obata-Ricci tensor and the Lee form of the Killing
extension."""

from __future__ import annotations

import logging

from dataclasses import dataclass
from typing import Dict, List, Optional

from obatalab.core.lie import LieAlgebraData
from obatalab.core.matrix import ExactMatrix
from obatalab.core.rational import ZERO, Rational, to_rational
from obatalab.exceptions import DimensionMismatchError
from obatalab.geometry.forms import LeftInvariantForm, ce_differential
from obatalab.geometry.metric import InvariantMetric
from obatalab.joyce.decomposition import JoyceDecomposition
from obatalab.joyce.hypercomplex import STRUCTURE_NAMES, HypercomplexTriple
from obatalab.types import CheckFailure, VerifyResult

LOGGER = logging.getLogger(__name__)

HALF = to_rational("1/2")


def _frame_algebra(
    g: Optional[LieAlgebraData], h: HypercomplexTriple
) -> LieAlgebraData:
    algebra = g if g is not None else h.algebra
    if algebra.dim != h.dim:
        raise DimensionMismatchError(
            f"Algebra of dimension {algebra.dim} does not carry a "
            f"structure of dimension {h.dim}"
        )
    return algebra


def _eta_value(
    g: LieAlgebraData, L: ExactMatrix, x: List[Rational]
) -> Rational:
    lx = L.apply(x)
    return -HALF * g.trace_ad(x) - HALF * (L @ g.ad(lx)).trace()


def obata_one_form(
    g: Optional[LieAlgebraData],
    h: HypercomplexTriple,
    structure: str = "I",
) -> LeftInvariantForm:
    """eta(X) = -1/2 tr(ad_X) - 1/2 tr(L ad_{LX}) on the frame basis.

    ``g`` is the algebra written on the hypercomplex frame; ``None``
    means ``h.algebra``.
    """

    algebra = _frame_algebra(g, h)
    L = h.structure(structure)
    return LeftInvariantForm.from_values(
        [_eta_value(algebra, L, list(algebra.unit(k))) for k in range(h.dim)]
    )


def verify_one_form_independence(
    g: Optional[LieAlgebraData], h: HypercomplexTriple
) -> VerifyResult:
    reference = obata_one_form(g, h, "I")
    failures = [
        CheckFailure("eta_independence", (index,), f"eta_{name} != eta_I")
        for index, name in enumerate(STRUCTURE_NAMES)
        if obata_one_form(g, h, name) != reference
    ]
    return VerifyResult.from_failures(
        "eta_independence", failures, checked=len(STRUCTURE_NAMES)
    )


@dataclass(frozen=True)
class RicciForm:
    bilinear: ExactMatrix

    def is_zero(self) -> bool:
        return self.bilinear.is_zero()

    def is_antisymmetric(self) -> bool:
        return self.bilinear.transpose() == -self.bilinear

    def as_form(self) -> LeftInvariantForm:
        return LeftInvariantForm.from_bilinear(self.bilinear)

    def to_json(self) -> Dict[str, object]:
        return {
            "zero": self.is_zero(),
            "form": self.as_form().to_json(),
        }


def obata_ricci(
    g: Optional[LieAlgebraData],
    h: HypercomplexTriple,
    structure: str = "I",
) -> RicciForm:
    """Ric(X,Y) = 1/2 tr(ad_[X,Y]) + 1/2 tr(L ad_{L[X,Y]})."""

    algebra = _frame_algebra(g, h)
    L = h.structure(structure)
    rows = [[ZERO] * h.dim for _ in range(h.dim)]
    for i in range(h.dim):
        for j in range(i + 1, h.dim):
            xy = list(algebra.bracket(algebra.unit(i), algebra.unit(j)))
            if not any(xy):
                continue
            value = -_eta_value(algebra, L, xy)
            rows[i][j] = value
            rows[j][i] = -value
    ricci = RicciForm(ExactMatrix(rows))
    LOGGER.debug("Obata-Ricci vanishes: %s", ricci.is_zero())
    return ricci


def verify_ricci_is_d_eta(
    g: Optional[LieAlgebraData], h: HypercomplexTriple
) -> VerifyResult:
    """Ric agrees with d(eta) and with itself across I, J, K."""

    algebra = _frame_algebra(g, h)
    d_eta = ce_differential(algebra, obata_one_form(algebra, h))
    failures: List[CheckFailure] = []
    for index, name in enumerate(STRUCTURE_NAMES):
        if obata_ricci(algebra, h, name).as_form() != d_eta:
            failures.append(
                CheckFailure("ricci", (index,), f"Ric_{name} != d eta")
            )
    return VerifyResult.from_failures(
        "ricci_is_d_eta", failures, checked=len(STRUCTURE_NAMES)
    )


def lee_form(
    d: JoyceDecomposition, metric: InvariantMetric
) -> LeftInvariantForm:
    """theta = 2 sum_j (1 + dim_H f_j) / lambda_j^2 * g(e1^j, -)."""

    gram = metric.frame_gram
    dim = gram.rows
    values = [ZERO] * dim
    for j, ((start, _), layer) in enumerate(
        zip(d.layer_slices(), d.layers)
    ):
        weight = to_rational(2 * (1 + layer.f_hdim)) / metric.lambdas[j]
        for k in range(dim):
            entry = gram[start, k]
            if entry:
                values[k] += weight * entry
    return LeftInvariantForm.from_values(values)


def is_closed(g: LieAlgebraData, form: LeftInvariantForm) -> bool:
    return ce_differential(g, form).is_zero()


__all__ = [
    "RicciForm",
    "is_closed",
    "lee_form",
    "obata_one_form",
    "obata_ricci",
    "verify_one_form_independence",
    "verify_ricci_is_d_eta",
]
