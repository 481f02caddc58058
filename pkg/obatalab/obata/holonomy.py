"""Holonomy algebra of a left-invariant connection by span closure."""

from __future__ import annotations

import logging

from dataclasses import dataclass, field
from typing import Dict, List, Optional, Sequence

from obatalab.constants import (
    METHOD_ALEKSEEVSKII,
    METHOD_FILTRATION,
    STATUS_PUBLISHED,
    STATUS_UNVERIFIED,
)
from obatalab.core.matrix import ExactMatrix
from obatalab.core.span import SpanBasis
from obatalab.exceptions import DimensionCapError
from obatalab.obata.blocks import BlockReport, block_report, trace_check
from obatalab.obata.connection import Connection
from obatalab.obata.curvature import CurvatureTensor, curvature
from obatalab.runtime.parallel import ordered_map

LOGGER = logging.getLogger(__name__)

DEFAULT_MAX_DEPTH = 6


@dataclass
class HolonomyResult:
    """Stabilized span of endomorphisms with its filtration history."""

    basis: SpanBasis
    ambient_dim: int
    method: str
    filtration_dims: List[int] = field(default_factory=list)
    stabilized: bool = False
    block_report: Optional[BlockReport] = None
    lie_closed: Optional[bool] = None

    @property
    def dim(self) -> int:
        return self.basis.dim

    @property
    def depth_reached(self) -> int:
        return len(self.filtration_dims) - 1

    @property
    def stabilization_depth(self) -> int:
        final = self.filtration_dims[-1]
        return next(
            i for i, value in enumerate(self.filtration_dims) if value == final
        )

    @property
    def quaternionic_bound(self) -> int:
        """dim gl(n, H) for n = ambient_dim / 4."""

        n = self.ambient_dim // 4
        return 4 * n * n

    def matrices(self) -> List[ExactMatrix]:
        return [
            ExactMatrix.from_flat(vec, self.ambient_dim, self.ambient_dim)
            for vec in self.basis.vectors
        ]

    def trace_check(self) -> Dict[str, object]:
        return trace_check(self.matrices())

    def to_json(
        self, reference: Optional[Sequence[int]] = None
    ) -> Dict[str, object]:
        """``reference`` holds published filtration values, if any."""

        known = len(reference) if reference is not None else 0
        payload: Dict[str, object] = {
            "method": self.method,
            "dim": self.dim,
            "filtration": list(self.filtration_dims),
            "filtration_status": [
                STATUS_PUBLISHED if i < known else STATUS_UNVERIFIED
                for i in range(len(self.filtration_dims))
            ],
            "stabilized": self.stabilized,
            "depth": self.depth_reached,
            "stabilization_depth": self.stabilization_depth,
            "bound": self.quaternionic_bound,
        }
        if self.block_report is not None:
            payload["blocks"] = self.block_report.to_json()
        if self.lie_closed is not None:
            payload["lie_closed"] = self.lie_closed
        return payload


class _Closure:
    """Span of endomorphisms plus the generators that grew it."""

    def __init__(self, dim: int) -> None:
        self.dim = dim
        self.span = SpanBasis(dim * dim)
        self.elements: List[ExactMatrix] = []

    def insert_all(
        self, candidates: Sequence[ExactMatrix]
    ) -> List[ExactMatrix]:
        grown: List[ExactMatrix] = []
        for candidate in candidates:
            if candidate.is_zero():
                continue
            if self.span.insert(candidate.flatten()):
                grown.append(candidate)
        self.elements.extend(grown)
        return grown


def _flatten(groups: Sequence[Sequence[ExactMatrix]]) -> List[ExactMatrix]:
    return [item for group in groups for item in group]


def _stopped(dims: Sequence[int], bound: int) -> bool:
    if dims and dims[-1] >= bound:
        return True
    return len(dims) >= 2 and dims[-1] == dims[-2]


def holonomy_algebra(
    c: Connection,
    method: str = METHOD_FILTRATION,
    max_depth: int = DEFAULT_MAX_DEPTH,
    *,
    workers: Optional[int] = None,
    dim_cap: Optional[int] = None,
    tensor: Optional[CurvatureTensor] = None,
    check_lie_closure: bool = False,
) -> HolonomyResult:
    """Smallest span containing R(e_i, e_j) closed under [nabla_z, -].

    ``filtration`` adds one covariant derivative per depth;
    ``alekseevskii`` also adds Lie brackets of the current generators
    on every pass. Both stop when the dimension repeats or reaches
    dim gl(n, H).
    """

    if method not in (METHOD_FILTRATION, METHOD_ALEKSEEVSKII):
        raise ValueError(f"Unknown holonomy method '{method}'")
    if max_depth < 1:
        raise ValueError("max_depth must be at least 1")
    if dim_cap is not None and c.dim > dim_cap:
        raise DimensionCapError(
            f"Ambient dimension {c.dim} exceeds the holonomy cap {dim_cap}"
        )
    curv = tensor if tensor is not None else curvature(c)
    closure = _Closure(c.dim)
    frontier = closure.insert_all(list(curv.values()))
    dims = [closure.span.dim]
    bound = 4 * (c.dim // 4) ** 2
    LOGGER.info("Holonomy %s: depth 0 dim %s", method, dims[-1])

    def derive(a: ExactMatrix) -> List[ExactMatrix]:
        return [nabla.commutator(a) for nabla in c.nabla]

    stabilized = _stopped(dims, bound)
    depth = 0
    while not stabilized and depth < max_depth:
        depth += 1
        candidates = _flatten(ordered_map(derive, frontier, workers))
        if method == METHOD_ALEKSEEVSKII:
            known = list(closure.elements)

            def brackets(a: ExactMatrix) -> List[ExactMatrix]:
                return [a.commutator(b) for b in known]

            candidates.extend(
                _flatten(ordered_map(brackets, frontier, workers))
            )
        frontier = closure.insert_all(candidates)
        dims.append(closure.span.dim)
        LOGGER.info(
            "Holonomy %s: depth %s dim %s", method, depth, dims[-1]
        )
        stabilized = _stopped(dims, bound)
    result = HolonomyResult(
        basis=closure.span,
        ambient_dim=c.dim,
        method=method,
        filtration_dims=dims,
        stabilized=stabilized,
    )
    result.block_report = block_report(result.matrices())
    if check_lie_closure:
        result.lie_closed = is_lie_closed(result)
    return result


def is_lie_closed(result: HolonomyResult) -> bool:
    matrices = result.matrices()
    for i, a in enumerate(matrices):
        for b in matrices[i + 1:]:
            if not result.basis.contains(a.commutator(b).flatten()):
                return False
    return True


__all__ = [
    "DEFAULT_MAX_DEPTH",
    "HolonomyResult",
    "holonomy_algebra",
    "is_lie_closed",
]
