"""HKT and twisted Calabi-Yau equations for left-invariant data."""

from __future__ import annotations

import logging

from dataclasses import dataclass
from typing import Dict, Optional

from obatalab.core.lie import LieAlgebraData
from obatalab.core.matrix import ExactMatrix
from obatalab.core.rational import to_rational
from obatalab.exceptions import DimensionCapError
from obatalab.geometry.forms import (
    ComplexForm,
    LeftInvariantForm,
    ce_differential,
    pullback,
)
from obatalab.geometry.lee import is_closed, lee_form, obata_one_form
from obatalab.geometry.metric import InvariantMetric
from obatalab.joyce.decomposition import JoyceDecomposition
from obatalab.joyce.hypercomplex import STRUCTURE_NAMES, HypercomplexTriple

LOGGER = logging.getLogger(__name__)

DEFAULT_PSI_CAP = 4


@dataclass(frozen=True)
class HyperhermitianData:
    """Algebra, structures, metric and Lee form on one common basis."""

    algebra: LieAlgebraData
    I: ExactMatrix  # noqa: E741
    J: ExactMatrix
    K: ExactMatrix
    gram: ExactMatrix
    theta: LeftInvariantForm

    @property
    def n(self) -> int:
        return self.algebra.dim // 4

    def structure(self, name: str) -> ExactMatrix:
        return {"I": self.I, "J": self.J, "K": self.K}[name]


def hyperhermitian_data(
    d: JoyceDecomposition, metric: InvariantMetric, h: HypercomplexTriple
) -> HyperhermitianData:
    return HyperhermitianData(
        algebra=h.algebra,
        I=h.I,
        J=h.J,
        K=h.K,
        gram=metric.frame_gram,
        theta=lee_form(d, metric),
    )


def fundamental_form(
    gram: ExactMatrix, L: ExactMatrix
) -> LeftInvariantForm:
    """omega_L(x, y) = g(L x, y)."""

    return LeftInvariantForm.from_bilinear(L.transpose() @ gram)


def twisted_differential(
    g: LieAlgebraData, form: LeftInvariantForm, L: ExactMatrix
) -> LeftInvariantForm:
    """d^c_L = (-1)^k L^{-1} d L on k-forms."""

    inner = ce_differential(g, pullback(form, L))
    result = pullback(inner, L.inverse())
    return -result if form.degree % 2 else result


@dataclass
class TwistedCYReport:
    compatible: bool
    n: int
    hkt: Optional[bool] = None
    strong: Optional[bool] = None
    d_psi: Optional[bool] = None
    dtheta_zero: Optional[bool] = None
    reason: str = ""

    @property
    def passed(self) -> bool:
        return all(
            value is True
            for value in (self.hkt, self.strong, self.d_psi, self.dtheta_zero)
        )

    def to_json(self) -> Dict[str, object]:
        payload: Dict[str, object] = {
            "compatible": self.compatible,
            "n": self.n,
            "hkt": self.hkt,
            "strong": self.strong,
            "dPsi_eq_theta_wedge_Psi": self.d_psi,
            "dtheta_zero": self.dtheta_zero,
            "passed": self.passed,
        }
        if self.reason:
            payload["reason"] = self.reason
        return payload


def holomorphic_volume(data: HyperhermitianData) -> ComplexForm:
    """Psi = Omega^n with Omega = (omega_J + i omega_K) / 2."""

    half = to_rational("1/2")
    omega = ComplexForm(
        fundamental_form(data.gram, data.J).scale(half),
        fundamental_form(data.gram, data.K).scale(half),
    )
    return omega.power(data.n)


def check_twisted_cy(
    data: HyperhermitianData, *, psi_cap: int = DEFAULT_PSI_CAP
) -> TwistedCYReport:
    if data.n > psi_cap:
        raise DimensionCapError(
            f"Quaternionic dimension {data.n} exceeds the volume-form cap "
            f"{psi_cap}"
        )
    g = data.algebra
    twisted: Dict[str, LeftInvariantForm] = {}
    for name in STRUCTURE_NAMES:
        L = data.structure(name)
        omega = fundamental_form(data.gram, L)
        twisted[name] = twisted_differential(g, omega, L)
    hkt = twisted["I"] == twisted["J"] == twisted["K"]
    strong = ce_differential(g, twisted["I"]).is_zero()
    psi = holomorphic_volume(data)
    d_psi = psi.differential(g) == psi.left_wedge(data.theta)
    dtheta_zero = is_closed(g, data.theta)
    LOGGER.info(
        "Twisted CY: hkt=%s strong=%s dPsi=%s dtheta=%s",
        hkt,
        strong,
        d_psi,
        dtheta_zero,
    )
    return TwistedCYReport(
        compatible=True,
        n=data.n,
        hkt=hkt,
        strong=strong,
        d_psi=d_psi,
        dtheta_zero=dtheta_zero,
    )


def verify_twisted_cy(
    d: JoyceDecomposition,
    metric: Optional[InvariantMetric],
    h: HypercomplexTriple,
    *,
    psi_cap: int = DEFAULT_PSI_CAP,
) -> TwistedCYReport:
    """Run the four equations; without a compatible metric only dtheta
    is decided, through d(eta)."""

    if metric is None:
        eta = obata_one_form(h.algebra, h)
        return TwistedCYReport(
            compatible=False,
            n=h.n,
            dtheta_zero=is_closed(h.algebra, eta),
            reason="no compatible Killing extension",
        )
    return check_twisted_cy(
        hyperhermitian_data(d, metric, h), psi_cap=psi_cap
    )


__all__ = [
    "DEFAULT_PSI_CAP",
    "HyperhermitianData",
    "TwistedCYReport",
    "check_twisted_cy",
    "fundamental_form",
    "holomorphic_volume",
    "hyperhermitian_data",
    "twisted_differential",
    "verify_twisted_cy",
]
