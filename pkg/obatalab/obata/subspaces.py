"""Detection of nabla-parallel left-invariant subbundles."""

from __future__ import annotations

import logging

from dataclasses import dataclass, field
from typing import Dict, List, Optional, Sequence, Tuple

from obatalab.core.matrix import ExactMatrix, Vector
from obatalab.core.rational import ONE, ZERO
from obatalab.core.span import SpanBasis, span_of
from obatalab.exceptions import NotHypercomplexError
from obatalab.joyce.decomposition import JoyceDecomposition
from obatalab.obata.connection import Connection
from obatalab.obata.holonomy import HolonomyResult
from obatalab.types import CheckFailure, VerifyResult

LOGGER = logging.getLogger(__name__)


@dataclass(frozen=True)
class InvariantSubspace:
    label: str
    basis: Tuple[Vector, ...]
    ambient_dim: int
    parallel: bool
    source: str = "catalog"
    indices: Tuple[int, ...] = ()

    @property
    def dim(self) -> int:
        return len(self.basis)

    @property
    def proper(self) -> bool:
        return 0 < self.dim < self.ambient_dim

    def to_json(self) -> Dict[str, object]:
        return {
            "label": self.label,
            "dim": self.dim,
            "parallel": self.parallel,
            "proper": self.proper,
            "source": self.source,
            "indices": list(self.indices),
        }


@dataclass
class ParallelSubspaceReport:
    candidates: List[InvariantSubspace] = field(default_factory=list)
    closures: List[InvariantSubspace] = field(default_factory=list)

    @property
    def proper_parallel(self) -> List[InvariantSubspace]:
        return [
            s for s in self.candidates + self.closures
            if s.parallel and s.proper
        ]

    @property
    def irreducible(self) -> bool:
        return not self.proper_parallel

    def find(self, label: str) -> Optional[InvariantSubspace]:
        for subspace in self.candidates + self.closures:
            if subspace.label == label:
                return subspace
        return None

    def to_json(self) -> Dict[str, object]:
        return {
            "candidates": [s.to_json() for s in self.candidates],
            "closures": [s.to_json() for s in self.closures],
            "irreducible": self.irreducible,
        }


def _unit(dim: int, index: int) -> Vector:
    vec = [ZERO] * dim
    vec[index] = ONE
    return tuple(vec)


def coordinate_subspace_is_parallel(
    c: Connection, indices: Sequence[int]
) -> bool:
    """nabla_{e_k} maps span{e_i : i in indices} into itself for all k."""

    inside = set(indices)
    outside = [r for r in range(c.dim) if r not in inside]
    for matrix in c.nabla:
        for col in inside:
            if any(matrix[r, col] for r in outside):
                return False
    return True


def invariant_closure(c: Connection, seeds: Sequence[Vector]) -> SpanBasis:
    """Smallest nabla-invariant subspace containing ``seeds``."""

    span = SpanBasis(c.dim)
    frontier = [v for v in seeds if span.insert(v)]
    while frontier:
        grown: List[Vector] = []
        for vector in frontier:
            for matrix in c.nabla:
                image = matrix.apply(vector)
                if any(image) and span.insert(image):
                    grown.append(image)
        frontier = grown
    return span


def _catalog(d: JoyceDecomposition) -> List[Tuple[str, Tuple[int, ...]]]:
    slices = d.layer_slices()
    found: List[Tuple[str, Tuple[int, ...]]] = []
    seen = set()
    for i, layer in enumerate(d.layers):
        if layer.f_hdim == 0:
            start, _ = slices[i]
            indices = tuple(range(start, start + 4))
            found.append((f"h{i + 1}", indices))
            seen.add(indices)
    # nested tails h_s + f_s + ... + h_m + f_m
    for s in range(1, d.m):
        indices = tuple(range(slices[s][0], slices[-1][1]))
        if indices in seen:
            continue
        seen.add(indices)
        found.append((f"tail{s + 1}", indices))
    return found


def find_parallel_subspaces(
    c: Connection, d: Optional[JoyceDecomposition] = None
) -> ParallelSubspaceReport:
    """Test the catalog subspaces, then close each h_i under nabla."""

    if d is None:
        if c.triple is None:
            raise NotHypercomplexError(
                "Connection carries no hypercomplex triple"
            )
        d = c.triple.decomposition
    report = ParallelSubspaceReport()
    for label, indices in _catalog(d):
        report.candidates.append(
            InvariantSubspace(
                label=label,
                basis=tuple(_unit(c.dim, i) for i in indices),
                ambient_dim=c.dim,
                parallel=coordinate_subspace_is_parallel(c, indices),
                indices=indices,
            )
        )
    for i, (start, _) in enumerate(d.layer_slices()):
        seeds = [_unit(c.dim, start + k) for k in range(4)]
        span = invariant_closure(c, seeds)
        report.closures.append(
            InvariantSubspace(
                label=f"closure(h{i + 1})",
                basis=tuple(span.vectors),
                ambient_dim=c.dim,
                parallel=True,
                source="closure",
            )
        )
    LOGGER.info(
        "Parallel subspaces: %s",
        [s.label for s in report.proper_parallel] or "none",
    )
    return report


def is_block_lower_triangular(parameters: ExactMatrix) -> bool:
    return all(
        not parameters[i, j]
        for i in range(parameters.rows)
        for j in range(i + 1, parameters.cols)
    )


def _completed_basis(basis: Sequence[Vector], dim: int) -> ExactMatrix:
    span = span_of(basis, dim)
    columns = list(basis)
    for index in range(dim):
        unit = _unit(dim, index)
        if span.insert(unit):
            columns.append(unit)
    return ExactMatrix.from_columns(columns)


def verify_reduction_consistency(
    holonomy: HolonomyResult, subspace: InvariantSubspace
) -> VerifyResult:
    """Holonomy matrices preserve ``subspace``: zero lower-left block in a
    basis that starts with it."""

    change = _completed_basis(subspace.basis, holonomy.ambient_dim)
    inverse = change.inverse()
    k = subspace.dim
    failures: List[CheckFailure] = []
    matrices = holonomy.matrices()
    for idx, matrix in enumerate(matrices):
        adapted = inverse @ matrix @ change
        if any(
            adapted[r, col]
            for r in range(k, holonomy.ambient_dim)
            for col in range(k)
        ):
            failures.append(
                CheckFailure(
                    "reduction", (idx,), f"leaves {subspace.label}"
                )
            )
    return VerifyResult.from_failures(
        "reduction_consistency", failures, checked=len(matrices)
    )


__all__ = [
    "InvariantSubspace",
    "ParallelSubspaceReport",
    "coordinate_subspace_is_parallel",
    "find_parallel_subspaces",
    "invariant_closure",
    "is_block_lower_triangular",
    "verify_reduction_consistency",
]
