"""Incremental span bases kept in reduced row echelon form."""

from __future__ import annotations

import logging

from typing import Dict, Iterable, List, Sequence, Tuple, Union

from obatalab.core.matrix import ExactMatrix, Vector
from obatalab.core.rational import ONE, ZERO, Rational, to_rational
from obatalab.exceptions import DimensionMismatchError

LOGGER = logging.getLogger(__name__)

SparseVector = Dict[int, Rational]
VectorLike = Union[Sequence[Rational], ExactMatrix]


def to_sparse(vector: VectorLike) -> SparseVector:
    values = vector.flatten() if isinstance(vector, ExactMatrix) else vector
    return {i: to_rational(v) for i, v in enumerate(values) if v}


class SpanBasis:
    """Span of vectors in QQ^n with a fully reduced echelon basis.

    Each stored row has a 1 at its pivot (its smallest nonzero index) and
    zeros at every other pivot. That form is unique for a given span, so
    the basis does not depend on insertion order. Not thread-safe:
    callers serialize ``insert``.
    """

    def __init__(self, ambient_dim: int) -> None:
        self.ambient_dim = ambient_dim
        self._rows: Dict[int, SparseVector] = {}

    @property
    def dim(self) -> int:
        return len(self._rows)

    @property
    def pivots(self) -> List[int]:
        return sorted(self._rows)

    @property
    def vectors(self) -> List[Vector]:
        """Dense reduced basis vectors ordered by pivot."""

        dense: List[Vector] = []
        for pivot in self.pivots:
            row = [ZERO] * self.ambient_dim
            for idx, value in self._rows[pivot].items():
                row[idx] = value
            dense.append(tuple(row))
        return dense

    def copy(self) -> "SpanBasis":
        clone = SpanBasis(self.ambient_dim)
        clone._rows = {p: dict(row) for p, row in self._rows.items()}
        return clone

    def _check(self, vector: VectorLike) -> SparseVector:
        size = (
            vector.rows * vector.cols
            if isinstance(vector, ExactMatrix)
            else len(vector)
        )
        if size != self.ambient_dim:
            raise DimensionMismatchError(
                f"Vector of length {size} for span in dimension "
                f"{self.ambient_dim}"
            )
        return to_sparse(vector)

    def _reduce_sparse(self, residual: SparseVector) -> SparseVector:
        hits = [p for p in residual if p in self._rows]
        for pivot in hits:
            coeff = residual.get(pivot)
            if not coeff:
                continue
            for idx, value in self._rows[pivot].items():
                updated = residual.get(idx, ZERO) - coeff * value
                if updated:
                    residual[idx] = updated
                else:
                    residual.pop(idx, None)
        return residual

    def reduce(self, vector: VectorLike) -> SparseVector:
        """Residual of ``vector`` modulo the span (sparse form)."""

        return self._reduce_sparse(self._check(vector))

    def contains(self, vector: VectorLike) -> bool:
        return not self.reduce(vector)

    def insert(self, vector: VectorLike) -> bool:
        residual = self.reduce(vector)
        if not residual:
            return False
        pivot = min(residual)
        inv = ONE / residual[pivot]
        new_row = {idx: value * inv for idx, value in residual.items()}
        for row in self._rows.values():
            coeff = row.get(pivot)
            if not coeff:
                continue
            for idx, value in new_row.items():
                updated = row.get(idx, ZERO) - coeff * value
                if updated:
                    row[idx] = updated
                else:
                    row.pop(idx, None)
        self._rows[pivot] = new_row
        return True

    def extend(self, vectors: Iterable[VectorLike]) -> List[int]:
        """Insert vectors in order; return indices of the ones that grew
        the span."""

        return [i for i, v in enumerate(vectors) if self.insert(v)]

    def coordinates(self, vector: VectorLike) -> Dict[int, Rational]:
        """Coefficients on the reduced rows (keyed by pivot)."""

        sparse = self._check(vector)
        if self._reduce_sparse(dict(sparse)):
            raise ValueError("Vector is not in the span")
        return {p: sparse[p] for p in self.pivots if sparse.get(p)}

    def __len__(self) -> int:
        return self.dim

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, SpanBasis):
            return NotImplemented
        return (
            self.ambient_dim == other.ambient_dim
            and self._rows == other._rows
        )


def span_insert(s: SpanBasis, v: VectorLike) -> Tuple[SpanBasis, bool]:
    """Insert ``v`` into ``s`` (in place) and report whether it was new."""

    inserted = s.insert(v)
    return s, inserted


def span_of(vectors: Iterable[VectorLike], ambient_dim: int) -> SpanBasis:
    basis = SpanBasis(ambient_dim)
    basis.extend(vectors)
    return basis


__all__ = [
    "SpanBasis",
    "SparseVector",
    "span_insert",
    "span_of",
    "to_sparse",
]
