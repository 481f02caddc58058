"""Combinatorial Joyce reduction driven by highest roots.

Each step takes a connected node set, records the layer of its highest
root and recurses into the components of the subsystem orthogonal to that
root. Everything stays in integer simple-root coordinates, so the E-series
costs no more than a few milliseconds.
"""

from __future__ import annotations

import logging

from dataclasses import dataclass, field
from typing import Dict, List, Tuple

from obatalab.rootsys.roots import Root, RootSystem, build_root_system

LOGGER = logging.getLogger(__name__)


@dataclass(frozen=True)
class ReductionStep:
    """One layer: the component it came from and its highest root."""

    nodes: Tuple[int, ...]
    highest_root: Root
    f_roots: Tuple[Root, ...]
    orthogonal_nodes: Tuple[int, ...]
    b_dim: int
    parent: int = -1

    @property
    def f_hdim(self) -> int:
        return len(self.f_roots) // 2


@dataclass(frozen=True)
class DiagramDecomposition:
    type_letter: str
    rank: int
    steps: Tuple[ReductionStep, ...] = field(default_factory=tuple)

    @property
    def m(self) -> int:
        return len(self.steps)

    @property
    def layers(self) -> List[Dict[str, int]]:
        return [
            {"d": k + 1, "f_hdim": step.f_hdim}
            for k, step in enumerate(self.steps)
        ]

    @property
    def f_hdims(self) -> List[int]:
        return [step.f_hdim for step in self.steps]

    @property
    def b_dim(self) -> int:
        return sum(step.b_dim for step in self.steps)

    @property
    def ell(self) -> int:
        return 2 * self.m - self.rank

    @property
    def trivial_f_count(self) -> int:
        return sum(1 for step in self.steps if step.f_hdim == 0)

    @property
    def algebra_dim(self) -> int:
        return self.b_dim + 3 * self.m + 4 * sum(self.f_hdims)

    @property
    def quaternionic_dim(self) -> int:
        """n with dim(T^ell x G) = 4n."""

        return self.m + sum(self.f_hdims)

    def to_json(self) -> Dict[str, object]:
        return {
            "type": self.type_letter,
            "rank": self.rank,
            "layers": self.layers,
            "b_dim": self.b_dim,
            "ell": self.ell,
            "trivial_f": self.trivial_f_count,
        }


def reduction_steps(rs: RootSystem, nodes: List[int]) -> List[ReductionStep]:
    """Depth-first reduction of a node set, components by smallest node."""

    steps: List[ReductionStep] = []
    _reduce(rs, nodes, -1, steps)
    return steps


def _reduce(
    rs: RootSystem,
    nodes: List[int],
    parent: int,
    steps: List[ReductionStep],
) -> None:
    for component in rs.components(nodes):
        theta = rs.highest_root_of(component)
        f_roots = tuple(
            root
            for root in rs.roots_supported_in(component)
            if root != theta and rs.inner(root, theta)
        )
        orthogonal = tuple(
            i
            for i in component
            if not rs.inner(rs.simple_roots[i], theta)
        )
        steps.append(
            ReductionStep(
                nodes=tuple(component),
                highest_root=theta,
                f_roots=f_roots,
                orthogonal_nodes=orthogonal,
                b_dim=len(component) - 1 - len(orthogonal),
                parent=parent,
            )
        )
        _reduce(rs, list(orthogonal), len(steps) - 1, steps)


def diagram_joyce_decomposition(
    type_letter: str, rank: int
) -> DiagramDecomposition:
    rs = build_root_system(type_letter, rank)
    steps = reduction_steps(rs, list(range(rs.rank)))
    decomposition = DiagramDecomposition(
        type_letter=rs.type_letter, rank=rs.rank, steps=tuple(steps)
    )
    LOGGER.debug(
        "%s: m=%s b=%s f=%s",
        rs.name,
        decomposition.m,
        decomposition.b_dim,
        decomposition.f_hdims,
    )
    return decomposition


def wolf_quaternionic_dim(type_letter: str, rank: int) -> int:
    """(dim g - dim k - 3) / 4 for k the centralizer of the first layer.

    k holds the Cartan directions orthogonal to the highest root and the
    root spaces of the orthogonal subsystem.
    """

    rs = build_root_system(type_letter, rank)
    theta = rs.highest_root
    orthogonal = [
        i for i in range(rs.rank) if not rs.inner(rs.simple_roots[i], theta)
    ]
    dim_g = rs.rank + 2 * len(rs.positive_roots)
    dim_k = (rs.rank - 1) + 2 * len(rs.roots_supported_in(orthogonal))
    return (dim_g - dim_k - 3) // 4


__all__ = [
    "DiagramDecomposition",
    "ReductionStep",
    "diagram_joyce_decomposition",
    "reduction_steps",
    "wolf_quaternionic_dim",
]
