"""Root systems of the simple types, in simple-root coordinates."""

from __future__ import annotations

import logging

from dataclasses import dataclass, field
from functools import lru_cache
from typing import Dict, FrozenSet, Iterable, List, Optional, Sequence, Tuple

from obatalab.exceptions import InvalidRootSystemError
from obatalab.rootsys.cartan import (
    CartanRows,
    cartan_matrix,
    symmetrized_cartan,
    validate_type,
)

LOGGER = logging.getLogger(__name__)

Root = Tuple[int, ...]

# classical counts of positive roots
_POSITIVE_COUNTS = {
    "A": lambda n: n * (n + 1) // 2,
    "B": lambda n: n * n,
    "C": lambda n: n * n,
    "D": lambda n: n * (n - 1),
    "E": lambda n: {6: 36, 7: 63, 8: 120}[n],
    "F": lambda n: 24,
    "G": lambda n: 6,
}


def height(root: Sequence[int]) -> int:
    return sum(root)


@dataclass(frozen=True)
class RootSystem:
    """Positive roots ordered by height, then lexicographically."""

    type_letter: str
    rank: int
    cartan_matrix: CartanRows
    gram: CartanRows
    positive_roots: Tuple[Root, ...]
    _index: Dict[Root, int] = field(
        default_factory=dict, compare=False, repr=False
    )

    def __post_init__(self) -> None:
        self._index.update(
            {root: k for k, root in enumerate(self.positive_roots)}
        )

    @property
    def name(self) -> str:
        return f"{self.type_letter}{self.rank}"

    @property
    def simple_roots(self) -> List[Root]:
        return [
            tuple(1 if j == i else 0 for j in range(self.rank))
            for i in range(self.rank)
        ]

    @property
    def highest_root(self) -> Root:
        return self.positive_roots[-1]

    @property
    def squared_lengths(self) -> Tuple[int, ...]:
        return tuple(self.gram[i][i] for i in range(self.rank))

    def inner(self, x: Sequence[int], y: Sequence[int]) -> int:
        """(x, y) through the symmetrized Cartan matrix."""

        total = 0
        for i, a in enumerate(x):
            if not a:
                continue
            row = self.gram[i]
            for j, b in enumerate(y):
                if b:
                    total += a * b * row[j]
        return total

    def pairing(self, x: Sequence[int], i: int) -> int:
        """<x, alpha_i^vee> = sum_j x_j A[i][j]."""

        row = self.cartan_matrix[i]
        return sum(x[j] * row[j] for j in range(self.rank) if x[j])

    def coroot(self, root: Sequence[int]) -> Tuple[int, ...]:
        """Coordinates of the coroot h_alpha on the simple coroots."""

        norm = self.inner(root, root)
        lengths = self.squared_lengths
        return tuple(
            root[i] * lengths[i] // norm for i in range(self.rank)
        )

    def index(self, root: Root) -> int:
        return self._index[root]

    def is_positive_root(self, root: Sequence[int]) -> bool:
        return tuple(root) in self._index

    def is_root(self, root: Sequence[int]) -> bool:
        vec = tuple(root)
        return vec in self._index or tuple(-a for a in vec) in self._index

    def support(self, root: Sequence[int]) -> FrozenSet[int]:
        return frozenset(i for i, a in enumerate(root) if a)

    def roots_supported_in(self, nodes: Iterable[int]) -> List[Root]:
        allowed = frozenset(nodes)
        return [
            root
            for root in self.positive_roots
            if self.support(root) <= allowed
        ]

    def highest_root_of(self, nodes: Iterable[int]) -> Root:
        """Highest root of the subsystem spanned by a connected node set."""

        candidates = self.roots_supported_in(nodes)
        if not candidates:
            raise InvalidRootSystemError("Empty node set has no roots")
        return candidates[-1]

    def components(self, nodes: Iterable[int]) -> List[List[int]]:
        """Connected components of the Dynkin subgraph on ``nodes``.

        Components come sorted by their smallest node index.
        """

        remaining = sorted(set(nodes))
        seen: set[int] = set()
        parts: List[List[int]] = []
        for start in remaining:
            if start in seen:
                continue
            stack = [start]
            part: List[int] = []
            seen.add(start)
            while stack:
                node = stack.pop()
                part.append(node)
                for other in remaining:
                    if other not in seen and self.gram[node][other]:
                        seen.add(other)
                        stack.append(other)
            parts.append(sorted(part))
        return parts

    def to_json(self) -> Dict[str, object]:
        return {
            "type": self.type_letter,
            "rank": self.rank,
            "cartan_matrix": [list(row) for row in self.cartan_matrix],
            "positive_roots": [list(root) for root in self.positive_roots],
            "highest_root": list(self.highest_root),
        }


def _enumerate_positive_roots(
    rank: int, cartan: CartanRows
) -> List[Root]:
    """Close the simple roots under root strings, height by height."""

    simple = [
        tuple(1 if j == i else 0 for j in range(rank)) for i in range(rank)
    ]
    known = set(simple)
    layer = list(simple)
    ordered: List[Root] = list(simple)
    while layer:
        next_layer: set[Root] = set()
        for root in layer:
            for i in range(rank):
                # p: how far the alpha_i string extends downwards
                p = 0
                probe = list(root)
                while True:
                    probe[i] -= 1
                    if tuple(probe) in known:
                        p += 1
                    else:
                        break
                pairing = sum(root[j] * cartan[i][j] for j in range(rank))
                if p - pairing >= 1:
                    raised = list(root)
                    raised[i] += 1
                    next_layer.add(tuple(raised))
        layer = sorted(next_layer)
        known.update(layer)
        ordered.extend(layer)
    return sorted(ordered, key=lambda r: (height(r), r))


@lru_cache(maxsize=None)
def build_root_system(type_letter: str, rank: int) -> RootSystem:
    letter = validate_type(type_letter, rank)
    cartan = cartan_matrix(letter, rank)
    positive = _enumerate_positive_roots(rank, cartan)
    expected = _POSITIVE_COUNTS[letter](rank)
    if len(positive) != expected:
        raise InvalidRootSystemError(
            f"{letter}{rank}: enumerated {len(positive)} positive roots, "
            f"expected {expected}"
        )
    LOGGER.debug("Built %s%s with %s positive roots", letter, rank, expected)
    return RootSystem(
        type_letter=letter,
        rank=rank,
        cartan_matrix=cartan,
        gram=symmetrized_cartan(letter, rank),
        positive_roots=tuple(positive),
    )


def maximal_root(rs: RootSystem) -> Root:
    return rs.highest_root


def root_difference(
    rs: RootSystem, x: Sequence[int], y: Sequence[int]
) -> Optional[Root]:
    """x - y when it is a (signed) root, else None."""

    diff = tuple(a - b for a, b in zip(x, y))
    return diff if rs.is_root(diff) else None


__all__ = [
    "Root",
    "RootSystem",
    "build_root_system",
    "height",
    "maximal_root",
    "root_difference",
]
