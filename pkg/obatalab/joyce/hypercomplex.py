"""Joyce hypercomplex structures on the adapted frame."""

from __future__ import annotations

import logging

from dataclasses import dataclass
from functools import cached_property
from typing import Dict, List, Optional, Sequence, Union

from obatalab.core.lie import LieAlgebraData
from obatalab.core.matrix import ExactMatrix, Vector
from obatalab.core.rational import ZERO, RationalLike, parse_rational_matrix
from obatalab.exceptions import DimensionMismatchError
from obatalab.joyce.decomposition import (
    JoyceDecomposition,
    check_parameter_matrix,
)
from obatalab.joyce.models import left_multiplication

LOGGER = logging.getLogger(__name__)

STRUCTURE_NAMES = ("I", "J", "K")
_UNIT_OF = {"I": "i", "J": "j", "K": "k"}


@dataclass(frozen=True)
class ParameterMatrix:
    """Invertible m x m matrix A; column i gives e1^i in the w basis."""

    entries: ExactMatrix

    def __post_init__(self) -> None:
        if not self.entries.is_square():
            raise DimensionMismatchError("Parameter matrix must be square")
        check_parameter_matrix(self.entries, self.entries.rows)

    @classmethod
    def parse(cls, text: str) -> "ParameterMatrix":
        """Parse ``"0,1;1,0"`` (rows separated by semicolons)."""

        return cls(ExactMatrix(parse_rational_matrix(text)))

    @classmethod
    def identity(cls, m: int) -> "ParameterMatrix":
        return cls(ExactMatrix.identity(m))

    @classmethod
    def coerce(
        cls,
        value: Union["ParameterMatrix", ExactMatrix, str, None],
        m: int,
    ) -> "ParameterMatrix":
        if value is None:
            return cls.identity(m)
        if isinstance(value, ParameterMatrix):
            return value
        if isinstance(value, str):
            return cls.parse(value)
        return cls(value)

    @property
    def m(self) -> int:
        return self.entries.rows

    def scaled_columns(
        self, factors: Sequence[RationalLike]
    ) -> "ParameterMatrix":
        return ParameterMatrix(self.entries @ ExactMatrix.diagonal(factors))

    def to_json(self) -> List[List[str]]:
        return self.entries.to_json()


def _block_structure(n: int, unit: str) -> ExactMatrix:
    block = left_multiplication(unit)
    data = [[ZERO] * (4 * n) for _ in range(4 * n)]
    for b in range(n):
        for r in range(4):
            for c in range(4):
                data[4 * b + r][4 * b + c] = block[r, c]
    return ExactMatrix._raw(data, 4 * n, 4 * n)


@dataclass(frozen=True)
class HypercomplexTriple:
    """(I, J, K) written in the hypercomplex frame.

    ``algebra`` is the ambient algebra re-expressed on the frame columns,
    so every matrix here acts on frame coordinates. Each 4-block of the
    frame (e1..e4 of a layer, or an f quadruple) carries left
    multiplication by i, j, k.
    """

    I: ExactMatrix  # noqa: E741
    J: ExactMatrix
    K: ExactMatrix
    frame: ExactMatrix
    algebra: LieAlgebraData
    decomposition: JoyceDecomposition
    parameters: ParameterMatrix

    @property
    def n(self) -> int:
        return self.I.rows // 4

    @property
    def dim(self) -> int:
        return self.I.rows

    def structures(self) -> Dict[str, ExactMatrix]:
        return {"I": self.I, "J": self.J, "K": self.K}

    def structure(self, name: str) -> ExactMatrix:
        return self.structures()[name]

    @cached_property
    def _frame_inverse(self) -> ExactMatrix:
        return self.frame.inverse()

    def to_frame(self, vector: Sequence[RationalLike]) -> Vector:
        """Ambient coordinates -> frame coordinates."""

        return self._frame_inverse.apply(vector)

    def w_frame_vectors(self) -> List[Vector]:
        """The torus + b basis w_j in frame coordinates."""

        return [self.to_frame(w) for w in self.decomposition.w_basis]

    def e1_indices(self) -> List[int]:
        return [start for start, _ in self.decomposition.layer_slices()]

    def with_structure(
        self, name: str, matrix: ExactMatrix
    ) -> "HypercomplexTriple":
        """Copy with one structure replaced (used for negative controls)."""

        values = self.structures()
        values[name] = matrix
        return HypercomplexTriple(
            I=values["I"],
            J=values["J"],
            K=values["K"],
            frame=self.frame,
            algebra=self.algebra,
            decomposition=self.decomposition,
            parameters=self.parameters,
        )

    def to_json(self) -> Dict[str, object]:
        return {
            "n": self.n,
            "parameters": self.parameters.to_json(),
            "frame": self.frame.to_json(),
            "frame_labels": list(self.algebra.labels),
        }


def hypercomplex_structure(
    decomposition: JoyceDecomposition,
    parameters: Union[ParameterMatrix, ExactMatrix, str, None] = None,
) -> HypercomplexTriple:
    """Joyce structure: I e1 = e2, I e3 = e4 and I f = [e2, f] per layer.

    J and K follow the same pattern with e3 and e4.
    """

    params = ParameterMatrix.coerce(parameters, decomposition.m)
    check_parameter_matrix(params.entries, decomposition.m)
    frame = decomposition.frame(params.entries)
    if frame.rows != frame.cols or not frame.det():
        raise DimensionMismatchError(
            "Frame vectors do not form a basis of the ambient algebra"
        )
    n = frame.rows // 4
    algebra = decomposition.ambient.change_basis(
        frame, decomposition.frame_labels()
    )
    I, J, K = (_block_structure(n, _UNIT_OF[name]) for name in STRUCTURE_NAMES)
    LOGGER.debug(
        "Hypercomplex structure on %s with A=%s",
        decomposition.label,
        params.to_json(),
    )
    return HypercomplexTriple(
        I=I,
        J=J,
        K=K,
        frame=frame,
        algebra=algebra,
        decomposition=decomposition,
        parameters=params,
    )


def quaternion_relations(
    triple: HypercomplexTriple,
) -> Dict[str, bool]:
    identity = ExactMatrix.identity(triple.dim)
    minus = -identity
    I, J, K = triple.I, triple.J, triple.K
    return {
        "I2": I @ I == minus,
        "J2": J @ J == minus,
        "K2": K @ K == minus,
        "IJK": I @ J @ K == minus,
        "IJ=K": I @ J == K,
        "JI=-K": J @ I == -K,
    }


def swap_frame_columns(
    triple: HypercomplexTriple, a: int, b: int, name: Optional[str] = "I"
) -> HypercomplexTriple:
    """Conjugate one structure by the transposition (a b)."""

    order = list(range(triple.dim))
    order[a], order[b] = order[b], order[a]
    key = name or "I"
    swapped = triple.structure(key).permute(order)
    return triple.with_structure(key, swapped)


__all__ = [
    "HypercomplexTriple",
    "ParameterMatrix",
    "STRUCTURE_NAMES",
    "hypercomplex_structure",
    "quaternion_relations",
    "swap_frame_columns",
]
