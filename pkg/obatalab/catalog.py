"""Supported groups and the realize -> decompose -> structure -> connection
pipeline."""

from __future__ import annotations

import logging

from dataclasses import dataclass, field
from functools import lru_cache
from typing import Dict, Optional, Tuple, Union

from obatalab.constants import (
    FAMILIES,
    FAMILY_E,
    FAMILY_E6,
    FAMILY_E7,
    FAMILY_E8,
    FAMILY_F4,
    FAMILY_G2,
    FAMILY_HOPF,
    FAMILY_SO,
    FAMILY_SP,
    FAMILY_SU,
)
from obatalab.exceptions import GroupSpecError
from obatalab.joyce.decomposition import JoyceDecomposition, joyce_decompose
from obatalab.joyce.hypercomplex import (
    HypercomplexTriple,
    ParameterMatrix,
    hypercomplex_structure,
)
from obatalab.joyce.models import (
    MatrixModel,
    QuaternionicModel,
    special_unitary_model,
    symplectic_model,
)
from obatalab.obata.connection import Connection, obata_connection
from obatalab.rootsys.chevalley import (
    ChevalleyRealization,
    chevalley_compact_form,
)
from obatalab.rootsys.roots import build_root_system
from obatalab.rootsys.tables import (
    TableRow,
    expected_torus_dim,
    group_name,
    root_type_for_group,
    table_row,
)

LOGGER = logging.getLogger(__name__)

Realization = Union[QuaternionicModel, MatrixModel, ChevalleyRealization]

_E_BY_RANK = {6: FAMILY_E6, 7: FAMILY_E7, 8: FAMILY_E8}
_EXCEPTIONAL = (FAMILY_E6, FAMILY_E7, FAMILY_E8, FAMILY_F4, FAMILY_G2)
_EXCEPTIONAL_RANK = {
    FAMILY_E6: 6,
    FAMILY_E7: 7,
    FAMILY_E8: 8,
    FAMILY_F4: 4,
    FAMILY_G2: 2,
}


@dataclass(frozen=True)
class GroupSpec:
    """A group T^ell x G from the classification, or the Hopf surface."""

    family: str
    n: int = 0
    torus: Optional[int] = field(default=None, compare=False)

    @classmethod
    def parse(
        cls, family: str, n: Optional[int] = None, torus: Optional[int] = None
    ) -> "GroupSpec":
        name = (family or "").strip().lower()
        if name not in FAMILIES:
            raise GroupSpecError(
                f"Unknown family '{family}'; expected one of {FAMILIES}"
            )
        if name == FAMILY_E:
            if n not in _E_BY_RANK:
                raise GroupSpecError("The E series needs --n 6, 7 or 8")
            name = _E_BY_RANK[n]
        if name in _EXCEPTIONAL:
            n = _EXCEPTIONAL_RANK[name]
        elif name == FAMILY_HOPF:
            n = 2
        elif n is None:
            raise GroupSpecError(f"Family '{name}' needs --n")
        spec = cls(family=name, n=int(n), torus=torus)
        spec.type_and_rank()
        if torus is not None and torus != spec.ell:
            raise GroupSpecError(
                f"{spec.label} carries a torus of dimension {spec.ell}, "
                f"not {torus}"
            )
        return spec

    @property
    def is_hopf(self) -> bool:
        return self.family == FAMILY_HOPF

    def type_and_rank(self) -> Tuple[str, int]:
        if self.is_hopf:
            return "A", 1
        return root_type_for_group(self.family, self.n)

    @property
    def ell(self) -> int:
        if self.is_hopf:
            return 1
        return expected_torus_dim(self.family, self.n)

    @property
    def label(self) -> str:
        if self.is_hopf:
            return "S1 x SU(2)"
        name = group_name(self.family, self.n)
        if self.ell == 0:
            return name
        if self.ell == 1:
            return f"S1 x {name}"
        return f"T{self.ell} x {name}"

    @property
    def diagram_only_default(self) -> bool:
        """E-series and F4 are handled combinatorially unless asked."""

        return self.family in (FAMILY_E6, FAMILY_E7, FAMILY_E8, FAMILY_F4)

    def table_row(self) -> TableRow:
        if self.is_hopf:
            return table_row(FAMILY_SU, 2)
        return table_row(self.family, self.n)

    def to_json(self) -> Dict[str, object]:
        letter, rank = self.type_and_rank()
        return {
            "family": self.family,
            "n": self.n,
            "type": f"{letter}{rank}",
            "torus": self.ell,
            "label": self.label,
        }


def realize(spec: GroupSpec) -> Realization:
    """Exact structure constants for the compact algebra of ``spec``."""

    if spec.family == FAMILY_SP:
        return symplectic_model(spec.n)
    if spec.family == FAMILY_SU or spec.is_hopf:
        return special_unitary_model(spec.n)
    letter, rank = spec.type_and_rank()
    if spec.family == FAMILY_SO or spec.family in _EXCEPTIONAL:
        return chevalley_compact_form(
            build_root_system(letter, rank), label=f"compact {spec.label}"
        )
    raise GroupSpecError(f"No realization for family '{spec.family}'")


@lru_cache(maxsize=None)
def decomposition_for(spec: GroupSpec) -> JoyceDecomposition:
    return joyce_decompose(realize(spec))


@lru_cache(maxsize=None)
def _triple(
    spec: GroupSpec, parameters: ParameterMatrix
) -> HypercomplexTriple:
    return hypercomplex_structure(decomposition_for(spec), parameters)


@lru_cache(maxsize=None)
def _connection(
    spec: GroupSpec, parameters: ParameterMatrix
) -> Connection:
    triple = _triple(spec, parameters)
    return obata_connection(triple.algebra, triple)


def _coerce_parameters(
    spec: GroupSpec, parameters: Union[ParameterMatrix, str, None]
) -> ParameterMatrix:
    return ParameterMatrix.coerce(parameters, decomposition_for(spec).m)


def structure_for(
    spec: GroupSpec, parameters: Union[ParameterMatrix, str, None] = None
) -> HypercomplexTriple:
    return _triple(spec, _coerce_parameters(spec, parameters))


def connection_for(
    spec: GroupSpec, parameters: Union[ParameterMatrix, str, None] = None
) -> Connection:
    params = _coerce_parameters(spec, parameters)
    LOGGER.info(
        "Obata connection of %s with A=%s", spec.label, params.to_json()
    )
    return _connection(spec, params)


__all__ = [
    "GroupSpec",
    "Realization",
    "connection_for",
    "decomposition_for",
    "realize",
    "structure_for",
]
