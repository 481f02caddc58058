"""Invariant metrics, form calculus, Lee form and twisted Calabi-Yau
checks."""

from .forms import (
    ComplexForm,
    LeftInvariantForm,
    ce_differential,
    pullback,
    wedge,
)
from .lee import (
    RicciForm,
    is_closed,
    lee_form,
    obata_one_form,
    obata_ricci,
    verify_one_form_independence,
    verify_ricci_is_d_eta,
)
from .metric import (
    InvariantMetric,
    extend_killing_metric,
    verify_bi_invariance,
    verify_hyperhermitian,
)
from .semidirect import (
    SemidirectExtension,
    block_diagonal,
    semidirect_hkt,
    standard_sp1_representation,
)
from .twisted_cy import (
    DEFAULT_PSI_CAP,
    HyperhermitianData,
    TwistedCYReport,
    check_twisted_cy,
    fundamental_form,
    holomorphic_volume,
    hyperhermitian_data,
    twisted_differential,
    verify_twisted_cy,
)

__all__ = [
    "ComplexForm",
    "DEFAULT_PSI_CAP",
    "HyperhermitianData",
    "InvariantMetric",
    "LeftInvariantForm",
    "RicciForm",
    "SemidirectExtension",
    "TwistedCYReport",
    "block_diagonal",
    "ce_differential",
    "check_twisted_cy",
    "extend_killing_metric",
    "fundamental_form",
    "holomorphic_volume",
    "hyperhermitian_data",
    "is_closed",
    "lee_form",
    "obata_one_form",
    "obata_ricci",
    "pullback",
    "semidirect_hkt",
    "standard_sp1_representation",
    "twisted_differential",
    "verify_bi_invariance",
    "verify_hyperhermitian",
    "verify_one_form_independence",
    "verify_ricci_is_d_eta",
    "verify_twisted_cy",
    "wedge",
]
