"""Finite-dimensional real Lie algebras given by structure constants."""

from __future__ import annotations

import logging

from functools import cached_property
from itertools import combinations
from typing import Dict, List, Mapping, Optional, Sequence, Tuple

from obatalab.core.matrix import ExactMatrix, Vector
from obatalab.core.rational import (
    ZERO,
    Rational,
    RationalLike,
    format_rational,
    to_rational,
)
from obatalab.exceptions import DimensionMismatchError
from obatalab.types import CheckFailure, VerifyResult

LOGGER = logging.getLogger(__name__)

Bracket = Dict[int, Rational]
StructureConstants = Dict[Tuple[int, int], Bracket]


def _normalize(
    dim: int, constants: Mapping[Tuple[int, int], Mapping[int, RationalLike]]
) -> StructureConstants:
    table: StructureConstants = {}
    for (i, j), vec in constants.items():
        if not (0 <= i < dim and 0 <= j < dim):
            raise DimensionMismatchError(f"Index pair {(i, j)} out of range")
        if i == j:
            if any(to_rational(v) for v in vec.values()):
                raise ValueError(f"[e{i},e{i}] must vanish")
            continue
        sign = 1 if i < j else -1
        key = (min(i, j), max(i, j))
        entry = table.setdefault(key, {})
        for k, value in vec.items():
            coeff = to_rational(value)
            if not coeff:
                continue
            updated = entry.get(k, ZERO) + sign * coeff
            if updated:
                entry[k] = updated
            else:
                entry.pop(k, None)
        if not entry:
            table.pop(key)
    return table


class LieAlgebraData:
    """Lie algebra on the basis e_0..e_{dim-1}.

    Only pairs ``i < j`` are stored; ``[e_j, e_i]`` is read off by
    antisymmetry. Brackets that vanish are simply absent.
    """

    def __init__(
        self,
        dim: int,
        structure_constants: Mapping[
            Tuple[int, int], Mapping[int, RationalLike]
        ],
        labels: Optional[Sequence[str]] = None,
    ) -> None:
        self.dim = dim
        self.labels: Tuple[str, ...] = tuple(
            labels if labels is not None else (f"e{i}" for i in range(dim))
        )
        if len(self.labels) != dim:
            raise DimensionMismatchError("One label per basis vector")
        self.structure_constants = _normalize(dim, structure_constants)

    # brackets ---------------------------------------------------------

    def basis_bracket(self, i: int, j: int) -> Bracket:
        if i == j:
            return {}
        if i < j:
            return self.structure_constants.get((i, j), {})
        return {
            k: -v for k, v in self.structure_constants.get((j, i), {}).items()
        }

    def _check(self, vector: Sequence[Rational]) -> None:
        if len(vector) != self.dim:
            raise DimensionMismatchError(
                f"Vector of length {len(vector)} for algebra of dim "
                f"{self.dim}"
            )

    def bracket(
        self, x: Sequence[RationalLike], y: Sequence[RationalLike]
    ) -> Vector:
        """Bilinear extension of the structure constants."""

        self._check(x)
        self._check(y)
        xs = [(i, to_rational(v)) for i, v in enumerate(x) if v]
        ys = [(j, to_rational(v)) for j, v in enumerate(y) if v]
        out = [ZERO] * self.dim
        for i, a in xs:
            for j, b in ys:
                if i == j:
                    continue
                for k, c in self.basis_bracket(i, j).items():
                    out[k] += a * b * c
        return tuple(out)

    def unit(self, i: int) -> Vector:
        vec = [ZERO] * self.dim
        vec[i] = to_rational(1)
        return tuple(vec)

    def ad(self, x: Sequence[RationalLike]) -> ExactMatrix:
        """Matrix of ad_x; column j is [x, e_j]."""

        self._check(x)
        data = [[ZERO] * self.dim for _ in range(self.dim)]
        for i, a in enumerate(x):
            a = to_rational(a)
            if not a:
                continue
            for j in range(self.dim):
                for k, c in self.basis_bracket(i, j).items():
                    data[k][j] += a * c
        return ExactMatrix._raw(data, self.dim, self.dim)

    @cached_property
    def ad_basis(self) -> List[ExactMatrix]:
        return [self.ad(self.unit(i)) for i in range(self.dim)]

    def killing_form(self) -> ExactMatrix:
        """B(x, y) = -tr(ad_x ad_y) on basis pairs."""

        n = self.dim
        data = [[ZERO] * n for _ in range(n)]
        for i in range(n):
            for j in range(i, n):
                # tr(ad_i ad_j) = sum_{l,k} c_{il}^k c_{jk}^l
                total = ZERO
                for l_idx in range(n):
                    for k, a in self.basis_bracket(i, l_idx).items():
                        b = self.basis_bracket(j, k).get(l_idx)
                        if b:
                            total += a * b
                data[i][j] = -total
                data[j][i] = -total
        return ExactMatrix._raw(data, n, n)

    def trace_ad(self, x: Sequence[RationalLike]) -> Rational:
        total = ZERO
        for i, a in enumerate(x):
            a = to_rational(a)
            if a:
                total += a * sum(
                    (
                        self.basis_bracket(i, j).get(j, ZERO)
                        for j in range(self.dim)
                    ),
                    ZERO,
                )
        return total

    def center(self) -> List[Vector]:
        # x central <=> ad_{e_j} x = 0 for all j
        rows: List[List[Rational]] = []
        for j in range(self.dim):
            rows.extend(self.ad_basis[j].to_rows())
        return ExactMatrix._raw(rows, len(rows), self.dim).nullspace()

    # checks -----------------------------------------------------------

    def verify_jacobi(self) -> VerifyResult:
        """Check [[e_i,e_j],e_k] + cyclic = 0 on every basis triple."""

        failures: List[CheckFailure] = []
        checked = 0
        for i, j, k in combinations(range(self.dim), 3):
            checked += 1
            total: Dict[int, Rational] = {}
            for a, b, c in ((i, j, k), (j, k, i), (k, i, j)):
                for m, coeff in self.basis_bracket(a, b).items():
                    for n, value in self.basis_bracket(m, c).items():
                        total[n] = total.get(n, ZERO) + coeff * value
            if any(total.values()):
                failures.append(
                    CheckFailure(
                        "jacobi",
                        (i, j, k),
                        f"Jacobiator of ({self.labels[i]}, "
                        f"{self.labels[j]}, {self.labels[k]}) is nonzero",
                    )
                )
        return VerifyResult.from_failures("jacobi", failures, checked=checked)

    # constructions ----------------------------------------------------

    def change_basis(
        self,
        basis: ExactMatrix,
        labels: Optional[Sequence[str]] = None,
    ) -> "LieAlgebraData":
        """Re-express the algebra on the columns of ``basis``."""

        if basis.shape != (self.dim, self.dim):
            raise DimensionMismatchError("Basis change must be square")
        inverse = basis.inverse()
        columns = basis.columns()
        table: Dict[Tuple[int, int], Dict[int, Rational]] = {}
        for a, b in combinations(range(self.dim), 2):
            value = self.bracket(columns[a], columns[b])
            if not any(value):
                continue
            coords = inverse.apply(value)
            table[(a, b)] = {k: c for k, c in enumerate(coords) if c}
        return LieAlgebraData(self.dim, table, labels or self.labels)

    def direct_sum(self, other: "LieAlgebraData") -> "LieAlgebraData":
        shift = self.dim
        table: Dict[Tuple[int, int], Dict[int, Rational]] = {
            key: dict(vec) for key, vec in self.structure_constants.items()
        }
        for (i, j), vec in other.structure_constants.items():
            table[(i + shift, j + shift)] = {
                k + shift: c for k, c in vec.items()
            }
        return LieAlgebraData(
            self.dim + other.dim, table, self.labels + other.labels
        )

    def with_torus(self, ell: int) -> "LieAlgebraData":
        """Prepend an abelian summand R^ell (the l u(1) directions)."""

        if ell == 0:
            return self
        return abelian(ell, prefix="z").direct_sum(self)

    def with_perturbed_constant(
        self, i: int, j: int, k: int, delta: RationalLike = 1
    ) -> "LieAlgebraData":
        """Copy with [e_i, e_j] shifted by ``delta * e_k``."""

        table: Dict[Tuple[int, int], Dict[int, Rational]] = {
            key: dict(vec) for key, vec in self.structure_constants.items()
        }
        entry = table.setdefault((i, j), {})
        entry[k] = entry.get(k, ZERO) + to_rational(delta)
        return LieAlgebraData(self.dim, table, self.labels)

    def to_json(self) -> Dict[str, object]:
        return {
            "dim": self.dim,
            "labels": list(self.labels),
            "brackets": [
                {
                    "i": i,
                    "j": j,
                    "value": {
                        str(k): format_rational(c)
                        for k, c in sorted(vec.items())
                    },
                }
                for (i, j), vec in sorted(self.structure_constants.items())
            ],
        }


def abelian(dim: int, prefix: str = "z") -> LieAlgebraData:
    return LieAlgebraData(
        dim, {}, [f"{prefix}{i + 1}" for i in range(dim)]
    )


def bracket(
    g: LieAlgebraData,
    x: Sequence[RationalLike],
    y: Sequence[RationalLike],
) -> Vector:
    return g.bracket(x, y)


def killing_form(g: LieAlgebraData) -> ExactMatrix:
    return g.killing_form()


def verify_jacobi(g: LieAlgebraData) -> VerifyResult:
    return g.verify_jacobi()


def is_positive_definite(m: ExactMatrix) -> bool:
    """All leading principal minors positive (symmetric elimination)."""

    if not m.is_square():
        raise DimensionMismatchError("Definiteness of a non-square matrix")
    a = m.to_rows()
    n = m.rows
    for k in range(n):
        pivot = a[k][k]
        if pivot <= 0:
            return False
        for i in range(k + 1, n):
            factor = a[i][k]
            if not factor:
                continue
            ratio = factor / pivot
            row_k = a[k]
            row_i = a[i]
            for j in range(k, n):
                if row_k[j]:
                    row_i[j] -= ratio * row_k[j]
    return True


__all__ = [
    "LieAlgebraData",
    "StructureConstants",
    "abelian",
    "bracket",
    "killing_form",
    "verify_jacobi",
    "is_positive_definite",
]
