"""Curvature and covariant derivatives of endomorphism-valued tensors."""

from __future__ import annotations

import logging

from dataclasses import dataclass, field
from itertools import combinations
from typing import Dict, Iterator, List, Tuple

from obatalab.core.matrix import ExactMatrix
from obatalab.obata.connection import Connection
from obatalab.types import CheckFailure, VerifyResult

LOGGER = logging.getLogger(__name__)

Index = Tuple[int, ...]


@dataclass(frozen=True)
class CurvatureTensor:
    """R(e_i, e_j) for i < j; the other pairs follow by antisymmetry."""

    dim: int
    r: Dict[Tuple[int, int], ExactMatrix]

    def value(self, i: int, j: int) -> ExactMatrix:
        if i == j:
            return ExactMatrix.zeros(self.dim)
        if i < j:
            return self.r[(i, j)]
        return -self.r[(j, i)]

    def values(self) -> Iterator[ExactMatrix]:
        return iter(self.r[key] for key in sorted(self.r))

    def nonzero(self) -> Dict[Tuple[int, int], ExactMatrix]:
        return {
            key: value for key, value in sorted(self.r.items())
            if not value.is_zero()
        }

    def is_flat(self) -> bool:
        return all(value.is_zero() for value in self.r.values())

    def as_tensor(self) -> "EndomorphismTensor":
        values: Dict[Index, ExactMatrix] = {}
        for (i, j), value in self.r.items():
            if value.is_zero():
                continue
            values[(i, j)] = value
            values[(j, i)] = -value
        return EndomorphismTensor(self.dim, 2, values)


def curvature(c: Connection) -> CurvatureTensor:
    """R(x,y) = [nabla_x, nabla_y] - nabla_{[x,y]}."""

    g = c.algebra
    r: Dict[Tuple[int, int], ExactMatrix] = {}
    for i, j in combinations(range(g.dim), 2):
        value = c.nabla[i].commutator(c.nabla[j])
        for k, coeff in g.basis_bracket(i, j).items():
            value = value - c.nabla[k].scale(coeff)
        r[(i, j)] = value
    LOGGER.debug(
        "Curvature has %s nonzero pairs",
        sum(1 for value in r.values() if not value.is_zero()),
    )
    return CurvatureTensor(g.dim, r)


def verify_bianchi(tensor: CurvatureTensor) -> VerifyResult:
    """R(x,y)z + R(y,z)x + R(z,x)y = 0 on basis triples."""

    failures: List[CheckFailure] = []
    checked = 0
    for i, j, k in combinations(range(tensor.dim), 3):
        checked += 1
        total = [
            a + b + c
            for a, b, c in zip(
                tensor.value(i, j).column(k),
                tensor.value(j, k).column(i),
                tensor.value(k, i).column(j),
            )
        ]
        if any(total):
            failures.append(
                CheckFailure("bianchi", (i, j, k), "cyclic sum is nonzero")
            )
    return VerifyResult.from_failures("bianchi", failures, checked=checked)


@dataclass(frozen=True)
class EndomorphismTensor:
    """T(e_{i1}, ..., e_{ik}) stored sparsely; absent entries are zero."""

    dim: int
    order: int
    values: Dict[Index, ExactMatrix] = field(default_factory=dict)

    def value(self, index: Index) -> ExactMatrix:
        found = self.values.get(index)
        return found if found is not None else ExactMatrix.zeros(self.dim)

    def is_zero(self) -> bool:
        return all(value.is_zero() for value in self.values.values())

    @classmethod
    def constant(cls, matrix: ExactMatrix) -> "EndomorphismTensor":
        return cls(matrix.rows, 0, {(): matrix})


def covariant_derivative(
    c: Connection, tensor: EndomorphismTensor
) -> EndomorphismTensor:
    """(nabla_x T)(y..) = [nabla_x, T(y..)] - sum_i T(.., nabla_x y_i, ..).

    The derivative direction becomes the first slot of the result.
    """

    dim = tensor.dim
    result: Dict[Index, ExactMatrix] = {}
    for x in range(dim):
        nabla_x = c.nabla[x]
        accum: Dict[Index, ExactMatrix] = {}
        for index, value in tensor.values.items():
            term = nabla_x.commutator(value)
            if not term.is_zero():
                accum[index] = accum.get(index, ExactMatrix.zeros(dim)) + term
            # nabla_x e_j = sum_l nabla_x[l, j] e_l
            for slot, l_idx in enumerate(index):
                for target in range(dim):
                    coeff = nabla_x[l_idx, target]
                    if not coeff:
                        continue
                    key = index[:slot] + (target,) + index[slot + 1:]
                    accum[key] = accum.get(
                        key, ExactMatrix.zeros(dim)
                    ) - value.scale(coeff)
        for index, value in accum.items():
            if not value.is_zero():
                result[(x,) + index] = value
    return EndomorphismTensor(dim, tensor.order + 1, result)


__all__ = [
    "CurvatureTensor",
    "EndomorphismTensor",
    "covariant_derivative",
    "curvature",
    "verify_bianchi",
]
