"""Explicit matrix models of su(n) and sp(n).

Both models are realized inside real matrices so brackets are plain exact
commutators:

* su(n) sits in gl(2n, R) through ``A + iB -> [[A, -B], [B, A]]``;
* sp(n) sits in gl(4n, R) by replacing each quaternion entry with its
  left-multiplication matrix on (1, i, j, k).
"""

from __future__ import annotations

import logging

from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations
from typing import Dict, List, Sequence, Tuple

from sympy.algebras.quaternion import Quaternion

from obatalab.core.lie import LieAlgebraData
from obatalab.core.matrix import ExactMatrix, Vector
from obatalab.core.rational import ONE, ZERO, Rational, to_rational
from obatalab.exceptions import DimensionMismatchError
from obatalab.rootsys.chevalley import (
    ChevalleyRealization,
    compact_basis_labels,
)
from obatalab.rootsys.roots import Root, build_root_system

LOGGER = logging.getLogger(__name__)

QUATERNION_UNITS = ("1", "i", "j", "k")
_UNIT_COORDS = {
    "1": (1, 0, 0, 0),
    "i": (0, 1, 0, 0),
    "j": (0, 0, 1, 0),
    "k": (0, 0, 0, 1),
}


def algebra_from_matrices(
    basis: Sequence[ExactMatrix], labels: Sequence[str]
) -> LieAlgebraData:
    """Structure constants of a matrix Lie algebra on the given basis."""

    if not basis:
        return LieAlgebraData(0, {}, [])
    stacked = ExactMatrix.from_columns([m.flatten() for m in basis])
    coordinates = stacked.left_inverse()
    constants: Dict[Tuple[int, int], Dict[int, Rational]] = {}
    for i, j in combinations(range(len(basis)), 2):
        value = basis[i].commutator(basis[j])
        if value.is_zero():
            continue
        flat = value.flatten()
        coords = coordinates.apply(flat)
        if stacked.apply(coords) != flat:
            raise DimensionMismatchError(
                f"[{labels[i]}, {labels[j]}] leaves the matrix span"
            )
        constants[(i, j)] = {k: c for k, c in enumerate(coords) if c}
    return LieAlgebraData(len(basis), constants, labels)


# su(n) ---------------------------------------------------------------


def _complex_embedding(
    n: int, real: Dict[Tuple[int, int], int], imag: Dict[Tuple[int, int], int]
) -> ExactMatrix:
    data = [[ZERO] * (2 * n) for _ in range(2 * n)]
    for (a, b), value in real.items():
        data[a][b] += value
        data[n + a][n + b] += value
    for (a, b), value in imag.items():
        data[a][n + b] -= value
        data[n + a][b] += value
    return ExactMatrix._raw(data, 2 * n, 2 * n)


def unitary_permutation(n: int) -> List[int]:
    """Odd indices ascending, then even ones descending (1-based)."""

    odds = list(range(1, n + 1, 2))
    evens = list(range(2, n + 1, 2))
    return odds + evens[::-1]


@dataclass(frozen=True)
class MatrixModel:
    """A realization together with the matrices behind its basis."""

    realization: ChevalleyRealization
    matrices: Tuple[ExactMatrix, ...]
    trace_scale: int

    @property
    def algebra(self) -> LieAlgebraData:
        return self.realization.algebra

    def trace_form(self, x: Vector, y: Vector) -> Rational:
        """Killing form through the defining representation.

        For su(n) in its real 2n x 2n embedding, B(X, Y) is
        -n tr(XY) of the real matrices.
        """

        mx = self.element(x)
        my = self.element(y)
        return -(mx @ my).trace() * self.trace_scale

    def element(self, coords: Vector) -> ExactMatrix:
        size = self.matrices[0].rows
        total = ExactMatrix.zeros(size)
        for c, m in zip(coords, self.matrices):
            if c:
                total = total + m.scale(c)
        return total


@lru_cache(maxsize=None)
def special_unitary_model(n: int) -> MatrixModel:
    """su(n) with the compact Chevalley-shaped basis t_j, u_a, v_a."""

    if n < 2:
        raise DimensionMismatchError("su(n) needs n >= 2")
    rs = build_root_system("A", n - 1)
    perm = [p - 1 for p in unitary_permutation(n)]
    matrices: List[ExactMatrix] = []
    for j in range(n - 1):
        a, b = perm[j], perm[j + 1]
        matrices.append(_complex_embedding(n, {}, {(a, a): 1, (b, b): -1}))
    root_space_index: Dict[Root, Tuple[int, int]] = {}
    for root in rs.positive_roots:
        support = [i for i, c in enumerate(root) if c]
        a, b = perm[support[0]], perm[support[-1] + 1]
        root_space_index[root] = (len(matrices), len(matrices) + 1)
        matrices.append(_complex_embedding(n, {(a, b): 1, (b, a): -1}, {}))
        matrices.append(_complex_embedding(n, {}, {(a, b): 1, (b, a): 1}))
    algebra = algebra_from_matrices(matrices, compact_basis_labels(rs))
    LOGGER.debug("su(%s) model has dimension %s", n, algebra.dim)
    realization = ChevalleyRealization(
        root_system=rs,
        algebra=algebra,
        root_space_index=root_space_index,
        cartan_index=tuple(range(n - 1)),
        label=f"su({n})",
    )
    return MatrixModel(
        realization=realization, matrices=tuple(matrices), trace_scale=n
    )


# sp(n) ---------------------------------------------------------------


@lru_cache(maxsize=None)
def left_multiplication(unit: str) -> ExactMatrix:
    """Matrix of x -> q x on (1, i, j, k)."""

    q = Quaternion(*_UNIT_COORDS[unit])
    columns = []
    for name in QUATERNION_UNITS:
        product = q * Quaternion(*_UNIT_COORDS[name])
        coeffs = (product.a, product.b, product.c, product.d)
        columns.append([to_rational(c) for c in coeffs])
    return ExactMatrix.from_columns(columns)


@lru_cache(maxsize=None)
def right_multiplication(unit: str) -> ExactMatrix:
    """Matrix of x -> x q on (1, i, j, k)."""

    q = Quaternion(*_UNIT_COORDS[unit])
    columns = []
    for name in QUATERNION_UNITS:
        product = Quaternion(*_UNIT_COORDS[name]) * q
        coeffs = (product.a, product.b, product.c, product.d)
        columns.append([to_rational(c) for c in coeffs])
    return ExactMatrix.from_columns(columns)


def _conjugate_sign(unit: str) -> int:
    return 1 if unit == "1" else -1


def _quaternionic_matrix(
    n: int, entries: Sequence[Tuple[int, int, str, int]]
) -> ExactMatrix:
    """Sum of sign * E_rs(q) embedded block-wise in gl(4n, R)."""

    data = [[ZERO] * (4 * n) for _ in range(4 * n)]
    for r, s, unit, sign in entries:
        block = left_multiplication(unit)
        for a in range(4):
            for b in range(4):
                value = block[a, b]
                if value:
                    data[4 * r + a][4 * s + b] += sign * value
    return ExactMatrix._raw(data, 4 * n, 4 * n)


@dataclass(frozen=True)
class QuaternionicLayer:
    """Index data of one Joyce layer of sp(n) on the algebra basis."""

    e_indices: Tuple[int, int, int]
    f_quadruples: Tuple[Tuple[int, int, int, int], ...]


@dataclass(frozen=True)
class QuaternionicModel:
    """sp(n) on the basis E_ii(q) and E_ij(q) - E_ji(conj q)."""

    n: int
    algebra: LieAlgebraData
    matrices: Tuple[ExactMatrix, ...]
    layers: Tuple[QuaternionicLayer, ...]
    label: str = ""

    @property
    def rank(self) -> int:
        return self.n

    def unit(self, index: int) -> Vector:
        vec = [ZERO] * self.algebra.dim
        vec[index] = ONE
        return tuple(vec)


@lru_cache(maxsize=None)
def symplectic_model(n: int) -> QuaternionicModel:
    if n < 1:
        raise DimensionMismatchError("sp(n) needs n >= 1")
    matrices: List[ExactMatrix] = []
    labels: List[str] = []
    layers: List[QuaternionicLayer] = []
    f_counter = 0
    for i in range(n):
        e_indices = []
        for slot, unit in enumerate(("i", "j", "k"), start=2):
            e_indices.append(len(matrices))
            matrices.append(_quaternionic_matrix(n, [(i, i, unit, 1)]))
            labels.append(f"e{i + 1}_{slot}")
        quads = []
        for j in range(i + 1, n):
            quad = []
            for unit in QUATERNION_UNITS:
                quad.append(len(matrices))
                matrices.append(
                    _quaternionic_matrix(
                        n,
                        [
                            (i, j, unit, 1),
                            (j, i, unit, -_conjugate_sign(unit)),
                        ],
                    )
                )
                f_counter += 1
                labels.append(f"f{i + 1}_{f_counter}")
            quads.append(tuple(quad))
        f_counter = 0
        layers.append(
            QuaternionicLayer(
                e_indices=tuple(e_indices),  # type: ignore[arg-type]
                f_quadruples=tuple(quads),  # type: ignore[arg-type]
            )
        )
    algebra = algebra_from_matrices(matrices, labels)
    LOGGER.debug("sp(%s) model has dimension %s", n, algebra.dim)
    return QuaternionicModel(
        n=n,
        algebra=algebra,
        matrices=tuple(matrices),
        layers=tuple(layers),
        label=f"sp({n})",
    )


__all__ = [
    "MatrixModel",
    "QUATERNION_UNITS",
    "QuaternionicLayer",
    "QuaternionicModel",
    "algebra_from_matrices",
    "left_multiplication",
    "right_multiplication",
    "special_unitary_model",
    "symplectic_model",
    "unitary_permutation",
]
