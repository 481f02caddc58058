"""Semidirect products g x_rho H^r carrying the product HKT structure."""

from __future__ import annotations

import logging

from dataclasses import dataclass
from typing import Dict, List, Mapping, Optional, Tuple

from obatalab.core.lie import LieAlgebraData
from obatalab.core.matrix import ExactMatrix
from obatalab.core.rational import ZERO, Rational
from obatalab.exceptions import NotARepresentationError
from obatalab.geometry.forms import LeftInvariantForm
from obatalab.geometry.twisted_cy import HyperhermitianData
from obatalab.joyce.hypercomplex import STRUCTURE_NAMES
from obatalab.joyce.models import left_multiplication, right_multiplication

LOGGER = logging.getLogger(__name__)

Representation = Mapping[int, ExactMatrix]

_UNITS = {"I": "i", "J": "j", "K": "k"}


@dataclass(frozen=True)
class SemidirectExtension:
    base_dim: int
    r: int
    data: HyperhermitianData

    @property
    def algebra(self) -> LieAlgebraData:
        return self.data.algebra

    @property
    def dim(self) -> int:
        return self.algebra.dim

    def to_json(self) -> Dict[str, object]:
        return {"base_dim": self.base_dim, "r": self.r, "dim": self.dim}


def block_diagonal(*blocks: ExactMatrix) -> ExactMatrix:
    size = sum(block.rows for block in blocks)
    rows = [[ZERO] * size for _ in range(size)]
    offset = 0
    for block in blocks:
        for i in range(block.rows):
            for j in range(block.cols):
                rows[offset + i][offset + j] = block[i, j]
        offset += block.rows
    return ExactMatrix._raw(rows, size, size)


def _quaternionic_blocks(r: int, unit: str) -> ExactMatrix:
    return block_diagonal(*([left_multiplication(unit)] * r))


def standard_sp1_representation(
    r: int = 1, *, offset: int = 1
) -> Dict[int, ExactMatrix]:
    """su(2) -> sp(1): e2, e3, e4 act by x -> -x i, -x j, -x k.

    ``offset`` is the frame index of e2.
    """

    result: Dict[int, ExactMatrix] = {}
    for slot, unit in enumerate(("i", "j", "k")):
        block = -right_multiplication(unit)
        result[offset + slot] = block_diagonal(*([block] * r))
    return result


def _representation_failures(
    g: LieAlgebraData, rho: Mapping[int, ExactMatrix], size: int
) -> List[str]:
    zero = ExactMatrix.zeros(size)
    problems: List[str] = []
    structures = [_quaternionic_blocks(size // 4, u) for u in "ijk"]
    for k, matrix in rho.items():
        if not 0 <= k < g.dim:
            problems.append(f"rho is defined on index {k} outside the base")
            continue
        if matrix.shape != (size, size):
            problems.append(f"rho(e_{k}) has shape {matrix.shape}")
            continue
        if matrix.transpose() != -matrix:
            problems.append(f"rho(e_{k}) is not skew")
        if any(matrix.commutator(s) != zero for s in structures):
            problems.append(f"rho(e_{k}) is not quaternion-linear")
    if problems:
        return problems
    for i in range(g.dim):
        for j in range(i + 1, g.dim):
            left = rho.get(i, zero).commutator(rho.get(j, zero))
            right = zero
            for k, coeff in g.basis_bracket(i, j).items():
                right = right + rho.get(k, zero).scale(coeff)
            if left != right:
                problems.append(
                    f"rho([e_{i}, e_{j}]) != [rho(e_{i}), rho(e_{j})]"
                )
    return problems


def _extended_algebra(
    g: LieAlgebraData, rho: Mapping[int, ExactMatrix], r: int
) -> LieAlgebraData:
    dim = g.dim + 4 * r
    table: Dict[Tuple[int, int], Dict[int, Rational]] = {
        key: dict(vec) for key, vec in g.structure_constants.items()
    }
    for k, matrix in rho.items():
        for a in range(4 * r):
            image = {
                g.dim + b: matrix[b, a]
                for b in range(4 * r)
                if matrix[b, a]
            }
            if image:
                table[(k, g.dim + a)] = image
    labels = list(g.labels) + [
        f"q^{s + 1}_{t + 1}" for s in range(r) for t in range(4)
    ]
    return LieAlgebraData(dim, table, labels)


def semidirect_hkt(
    base: HyperhermitianData,
    rho: Optional[Representation],
    r: int,
) -> SemidirectExtension:
    """g x_rho H^r with I~(X, q) = (IX, iq) and g~ = g + standard.

    ``rho`` maps frame indices of the base to 4r x 4r matrices; absent
    indices act by zero. The Lee form is pulled back along the
    projection onto g.
    """

    if r < 0:
        raise ValueError("r must be non-negative")
    action = dict(rho or {})
    problems = _representation_failures(base.algebra, action, 4 * r)
    if problems:
        raise NotARepresentationError("; ".join(problems))
    algebra = _extended_algebra(base.algebra, action, r)
    structures = {
        name: block_diagonal(
            base.structure(name), _quaternionic_blocks(r, _UNITS[name])
        )
        for name in STRUCTURE_NAMES
    }
    gram = block_diagonal(base.gram, ExactMatrix.identity(4 * r))
    theta = LeftInvariantForm(1, dict(base.theta.coefficients))
    LOGGER.info(
        "Semidirect extension of dimension %s (r=%s, rho on %s generators)",
        algebra.dim,
        r,
        len(action),
    )
    return SemidirectExtension(
        base_dim=base.algebra.dim,
        r=r,
        data=HyperhermitianData(
            algebra=algebra,
            I=structures["I"],
            J=structures["J"],
            K=structures["K"],
            gram=gram,
            theta=theta,
        ),
    )


__all__ = [
    "SemidirectExtension",
    "block_diagonal",
    "semidirect_hkt",
    "standard_sp1_representation",
]
