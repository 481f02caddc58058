"""Quaternionic block view of endomorphisms in the hypercomplex frame."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Dict, List, Sequence, Tuple

from obatalab.core.matrix import ExactMatrix
from obatalab.core.rational import ZERO, format_rational
from obatalab.joyce.models import QUATERNION_UNITS, right_multiplication

KIND_ZERO = "zero"
KIND_REAL = "real"
KIND_IMAGINARY = "imaginary"
KIND_GENERAL = "general"
KIND_NOT_QUATERNIONIC = "not-quaternionic"


def block(matrix: ExactMatrix, r: int, c: int) -> ExactMatrix:
    return matrix.submatrix(range(4 * r, 4 * r + 4), range(4 * c, 4 * c + 4))


def quaternion_of_block(b: ExactMatrix) -> Tuple | None:
    """q with b = (x -> x q) on (1, i, j, k), or None if b is not one."""

    q = b.column(0)
    rebuilt = ExactMatrix.zeros(4)
    for coeff, unit in zip(q, QUATERNION_UNITS):
        if coeff:
            rebuilt = rebuilt + right_multiplication(unit).scale(coeff)
    return tuple(q) if rebuilt == b else None


def classify_block(b: ExactMatrix) -> str:
    if b.is_zero():
        return KIND_ZERO
    q = quaternion_of_block(b)
    if q is None:
        return KIND_NOT_QUATERNIONIC
    if not any(q[1:]):
        return KIND_REAL
    if not q[0]:
        return KIND_IMAGINARY
    return KIND_GENERAL


def _merge(kinds: Sequence[str]) -> str:
    present = {kind for kind in kinds if kind != KIND_ZERO}
    if not present:
        return KIND_ZERO
    if KIND_NOT_QUATERNIONIC in present:
        return KIND_NOT_QUATERNIONIC
    if len(present) == 1:
        return present.pop()
    return KIND_GENERAL


@dataclass
class BlockReport:
    n: int
    kinds: Dict[Tuple[int, int], str] = field(default_factory=dict)
    traces: List[str] = field(default_factory=list)

    @property
    def nonzero_blocks(self) -> List[Tuple[int, int]]:
        return sorted(
            key for key, kind in self.kinds.items() if kind != KIND_ZERO
        )

    @property
    def nonzero_rows(self) -> List[int]:
        return sorted({r for r, _ in self.nonzero_blocks})

    @property
    def quaternionic(self) -> bool:
        return KIND_NOT_QUATERNIONIC not in self.kinds.values()

    @property
    def all_traceless(self) -> bool:
        return all(trace == "0" for trace in self.traces)

    def kind(self, r: int, c: int) -> str:
        return self.kinds.get((r, c), KIND_ZERO)

    def to_json(self) -> Dict[str, object]:
        return {
            "n": self.n,
            "kinds": [
                [self.kind(r, c) for c in range(self.n)]
                for r in range(self.n)
            ],
            "nonzero_rows": self.nonzero_rows,
            "quaternionic": self.quaternionic,
            "all_traceless": self.all_traceless,
            "traces": self.traces,
        }


def block_report(matrices: Sequence[ExactMatrix]) -> BlockReport:
    """Per-block kinds over all matrices, plus each matrix's real trace."""

    if not matrices:
        return BlockReport(n=0)
    n = matrices[0].rows // 4
    per_block: Dict[Tuple[int, int], List[str]] = {}
    for matrix in matrices:
        for r in range(n):
            for c in range(n):
                per_block.setdefault((r, c), []).append(
                    classify_block(block(matrix, r, c))
                )
    return BlockReport(
        n=n,
        kinds={key: _merge(kinds) for key, kinds in per_block.items()},
        traces=[format_rational(matrix.trace()) for matrix in matrices],
    )


def trace_check(matrices: Sequence[ExactMatrix]) -> Dict[str, object]:
    """Real traces of holonomy generators (sl(n,H) criterion)."""

    traces = [matrix.trace() for matrix in matrices]
    return {
        "traceless": all(trace == ZERO for trace in traces),
        "nonzero_trace_count": sum(1 for trace in traces if trace),
        "traces": [format_rational(trace) for trace in traces],
    }


__all__ = [
    "BlockReport",
    "KIND_GENERAL",
    "KIND_IMAGINARY",
    "KIND_NOT_QUATERNIONIC",
    "KIND_REAL",
    "KIND_ZERO",
    "block",
    "block_report",
    "classify_block",
    "quaternion_of_block",
    "trace_check",
]
