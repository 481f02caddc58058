"""Explicit Joyce decomposition of a realized compact algebra."""

from __future__ import annotations

import logging

from dataclasses import dataclass, field
from math import gcd, lcm
from typing import Dict, List, Optional, Sequence, Tuple, Union

from obatalab.constants import ROLE_E1, ROLE_E2, ROLE_E3, ROLE_E4, ROLE_F
from obatalab.core.lie import LieAlgebraData, is_positive_definite
from obatalab.core.matrix import ExactMatrix, Vector
from obatalab.core.rational import ONE, ZERO, QQ, Rational
from obatalab.exceptions import (
    DimensionMismatchError,
    MissingRootDataError,
    NotCompactError,
    SingularParameterError,
)
from obatalab.joyce.models import MatrixModel, QuaternionicModel
from obatalab.rootsys.chevalley import ChevalleyRealization
from obatalab.rootsys.diagram import ReductionStep, reduction_steps
from obatalab.rootsys.roots import Root

LOGGER = logging.getLogger(__name__)

Quadruple = Tuple[Vector, Vector, Vector, Vector]
Realization = Union[ChevalleyRealization, MatrixModel, QuaternionicModel]


@dataclass(frozen=True)
class JoyceLayer:
    """d_i = <e2, e3, e4> and f_i in quadruples (f, [e2,f], [e3,f], [e4,f])."""

    e2: Vector
    e3: Vector
    e4: Vector
    f_quadruples: Tuple[Quadruple, ...] = ()
    highest_root: Optional[Root] = None

    @property
    def f_hdim(self) -> int:
        return len(self.f_quadruples)

    @property
    def d_vectors(self) -> List[Vector]:
        return [self.e2, self.e3, self.e4]

    @property
    def f_vectors(self) -> List[Vector]:
        return [v for quad in self.f_quadruples for v in quad]


@dataclass(frozen=True)
class JoyceDecomposition:
    """T^ell x G split as (torus + b) + sum_i (d_i + f_i).

    Vectors live in the ambient algebra, whose first ``ell`` coordinates
    are the torus directions z_1..z_ell.
    """

    ambient: LieAlgebraData
    ell: int
    rank: int
    w_basis: Tuple[Vector, ...]
    layers: Tuple[JoyceLayer, ...]
    label: str = ""
    w_labels: Tuple[str, ...] = field(default_factory=tuple)

    @property
    def m(self) -> int:
        return len(self.layers)

    @property
    def b_dim(self) -> int:
        return len(self.w_basis) - self.ell

    @property
    def b_vectors(self) -> List[Vector]:
        return list(self.w_basis[self.ell:])

    @property
    def f_hdims(self) -> List[int]:
        return [layer.f_hdim for layer in self.layers]

    @property
    def quaternionic_dim(self) -> int:
        return self.m + sum(self.f_hdims)

    @property
    def dim(self) -> int:
        return self.ambient.dim

    @property
    def adapted_basis(self) -> ExactMatrix:
        """Columns: w_1..w_m, then e2, e3, e4 per layer, then the f's."""

        columns: List[Vector] = list(self.w_basis)
        for layer in self.layers:
            columns.extend(layer.d_vectors)
        for layer in self.layers:
            columns.extend(layer.f_vectors)
        return ExactMatrix.from_columns(columns)

    @property
    def layer_index(self) -> Dict[int, Tuple[int, str]]:
        """Adapted-basis column -> (layer, role); w columns map to layer -1."""

        index: Dict[int, Tuple[int, str]] = {}
        col = 0
        for _ in self.w_basis:
            index[col] = (-1, ROLE_E1)
            col += 1
        for i, _ in enumerate(self.layers):
            for role in (ROLE_E2, ROLE_E3, ROLE_E4):
                index[col] = (i, role)
                col += 1
        for i, layer in enumerate(self.layers):
            for _ in layer.f_vectors:
                index[col] = (i, ROLE_F)
                col += 1
        return index

    def e1_vectors(self, parameters: ExactMatrix) -> List[Vector]:
        """e1^i = sum_j A[j][i] w_j."""

        check_parameter_matrix(parameters, self.m)
        vectors: List[Vector] = []
        for i in range(self.m):
            vec = [ZERO] * self.dim
            for j, w in enumerate(self.w_basis):
                coeff = parameters[j, i]
                if coeff:
                    for k, value in enumerate(w):
                        if value:
                            vec[k] += coeff * value
            vectors.append(tuple(vec))
        return vectors

    def frame(self, parameters: ExactMatrix) -> ExactMatrix:
        """Hypercomplex frame: per layer e1, e2, e3, e4, then f quadruples."""

        e1 = self.e1_vectors(parameters)
        columns: List[Vector] = []
        for i, layer in enumerate(self.layers):
            columns.extend([e1[i], layer.e2, layer.e3, layer.e4])
            columns.extend(layer.f_vectors)
        return ExactMatrix.from_columns(columns)

    def frame_roles(self) -> List[Tuple[int, str]]:
        roles: List[Tuple[int, str]] = []
        for i, layer in enumerate(self.layers):
            roles.extend(
                (i, role) for role in (ROLE_E1, ROLE_E2, ROLE_E3, ROLE_E4)
            )
            roles.extend((i, ROLE_F) for _ in layer.f_vectors)
        return roles

    def frame_labels(self) -> List[str]:
        """e^i_k and f^i_l names of the frame columns."""

        labels: List[str] = []
        for i, layer in enumerate(self.layers):
            labels.extend(f"e^{i + 1}_{k}" for k in range(1, 5))
            labels.extend(
                f"f^{i + 1}_{l + 1}" for l in range(len(layer.f_vectors))
            )
        return labels

    def layer_slices(self) -> List[Tuple[int, int]]:
        """Frame index ranges [start, stop) of each h_i + f_i."""

        slices: List[Tuple[int, int]] = []
        start = 0
        for layer in self.layers:
            stop = start + 4 + 4 * layer.f_hdim
            slices.append((start, stop))
            start = stop
        return slices

    def to_json(self) -> Dict[str, object]:
        return {
            "label": self.label,
            "ell": self.ell,
            "rank": self.rank,
            "m": self.m,
            "b_dim": self.b_dim,
            "f_hdims": self.f_hdims,
            "layers": [
                {"d": i + 1, "f_hdim": layer.f_hdim}
                for i, layer in enumerate(self.layers)
            ],
            "adapted_basis": self.adapted_basis.to_json(),
        }


def check_parameter_matrix(parameters: ExactMatrix, m: int) -> None:
    if parameters.shape != (m, m):
        raise DimensionMismatchError(
            f"Parameter matrix must be {m}x{m}, got {parameters.shape}"
        )
    if not parameters.det():
        raise SingularParameterError("Parameter matrix is singular")


def _shift(vector: Sequence[Rational], ell: int) -> Vector:
    return tuple([ZERO] * ell + list(vector))


def _torus_unit(k: int, dim: int) -> Vector:
    vec = [ZERO] * dim
    vec[k] = ONE
    return tuple(vec)


def _primitive(vector: Sequence[Rational]) -> Tuple[int, ...]:
    """Scale to coprime integers with the first nonzero entry positive."""

    denominators = [int(v.denominator) for v in vector if v]
    scale = 1
    for d in denominators:
        scale = lcm(scale, d)
    ints = [int((v * scale).numerator) for v in vector]
    divisor = 0
    for value in ints:
        divisor = gcd(divisor, value)
    ints = [value // divisor for value in ints] if divisor else ints
    first = next((value for value in ints if value), 0)
    return tuple(-v for v in ints) if first < 0 else tuple(ints)


def canonical_b_coroots(
    realization: ChevalleyRealization, step: ReductionStep
) -> List[Tuple[int, ...]]:
    """Coroot coordinates of the b part contributed by one reduction step.

    Solves theta(H) = 0 and beta(H) = 0 for the simple roots beta of the
    orthogonal subsystem, with H in the coroot span of the component.
    """

    if not step.b_dim:
        return []
    rs = realization.root_system
    nodes = list(step.nodes)
    conditions = [step.highest_root] + [
        rs.simple_roots[i] for i in step.orthogonal_nodes
    ]
    # alpha(h_j) = sum_k alpha_k A[j][k]
    rows = [
        [QQ(rs.pairing(cond, j)) for j in nodes] for cond in conditions
    ]
    kernel = ExactMatrix(rows).nullspace()
    reduced, _ = ExactMatrix.from_columns(kernel).transpose().rref()
    coroots: List[Tuple[int, ...]] = []
    for row in reduced.to_rows():
        if not any(row):
            continue
        local = _primitive(row)
        full = [0] * rs.rank
        for pos, j in enumerate(nodes):
            full[j] = local[pos]
        coroots.append(tuple(full))
    if len(coroots) != step.b_dim:
        raise MissingRootDataError(
            f"Expected {step.b_dim} b directions, found {len(coroots)}"
        )
    return coroots


def _quadruple(
    algebra: LieAlgebraData, e2: Vector, e3: Vector, e4: Vector, f: Vector
) -> Quadruple:
    return (
        f,
        algebra.bracket(e2, f),
        algebra.bracket(e3, f),
        algebra.bracket(e4, f),
    )


def _layers_from_roots(
    realization: ChevalleyRealization, ell: int
) -> Tuple[List[JoyceLayer], List[Vector], List[str]]:
    rs = realization.root_system
    algebra = realization.algebra
    steps = reduction_steps(rs, list(range(rs.rank)))
    layers: List[JoyceLayer] = []
    b_vectors: List[Vector] = []
    b_labels: List[str] = []
    for step in steps:
        theta = step.highest_root
        e2 = realization.coroot_vector(theta)
        e3 = realization.root_vector(theta, "u")
        e4 = realization.root_vector(theta, "v")
        used: set = set()
        quads: List[Quadruple] = []
        for root in step.f_roots:
            if root in used:
                continue
            partner = tuple(a - b for a, b in zip(theta, root))
            used.update({root, partner})
            seed = root if rs.index(root) < rs.index(partner) else partner
            f = realization.root_vector(seed, "u")
            quads.append(_quadruple(algebra, e2, e3, e4, f))
        layers.append(
            JoyceLayer(
                e2=_shift(e2, ell),
                e3=_shift(e3, ell),
                e4=_shift(e4, ell),
                f_quadruples=tuple(
                    tuple(_shift(v, ell) for v in quad)  # type: ignore
                    for quad in quads
                ),
                highest_root=theta,
            )
        )
        for coroot in canonical_b_coroots(realization, step):
            b_vectors.append(_shift(realization.cartan_vector(coroot), ell))
            b_labels.append(f"E{len(b_labels) + 1}")
    return layers, b_vectors, b_labels


def _layers_from_quaternionic(
    model: QuaternionicModel, ell: int
) -> List[JoyceLayer]:
    layers: List[JoyceLayer] = []
    for layer in model.layers:
        e2, e3, e4 = (_shift(model.unit(k), ell) for k in layer.e_indices)
        quads = tuple(
            tuple(_shift(model.unit(k), ell) for k in quad)
            for quad in layer.f_quadruples
        )
        layers.append(
            JoyceLayer(
                e2=e2, e3=e3, e4=e4, f_quadruples=quads  # type: ignore
            )
        )
    return layers


def joyce_decompose(
    realization: Realization, *, check_compact: bool = True
) -> JoyceDecomposition:
    """Decompose T^ell x G for the realized compact algebra g.

    ell = 2m - r is adjoined as an abelian summand placed first.
    """

    if isinstance(realization, MatrixModel):
        realization = realization.realization
    if isinstance(realization, QuaternionicModel):
        algebra = realization.algebra
        rank = realization.rank
        m = len(realization.layers)
    elif isinstance(realization, ChevalleyRealization):
        algebra = realization.algebra
        rank = realization.root_system.rank
        m = len(reduction_steps(realization.root_system, list(range(rank))))
    else:
        raise MissingRootDataError(
            "Joyce decomposition needs a realization with root metadata"
        )
    if check_compact and not is_positive_definite(algebra.killing_form()):
        raise NotCompactError(
            f"Killing form of {realization.label or 'algebra'} is not "
            "negative definite"
        )
    ell = 2 * m - rank
    ambient = algebra.with_torus(ell)
    if isinstance(realization, QuaternionicModel):
        layers = _layers_from_quaternionic(realization, ell)
        b_vectors: List[Vector] = []
        b_labels: List[str] = []
    else:
        layers, b_vectors, b_labels = _layers_from_roots(realization, ell)
    torus = [_torus_unit(k, ambient.dim) for k in range(ell)]
    decomposition = JoyceDecomposition(
        ambient=ambient,
        ell=ell,
        rank=rank,
        w_basis=tuple(torus + b_vectors),
        layers=tuple(layers),
        label=realization.label,
        w_labels=tuple([f"z{k + 1}" for k in range(ell)] + b_labels),
    )
    LOGGER.info(
        "Joyce decomposition of %s: ell=%s m=%s b=%s f=%s",
        realization.label,
        ell,
        decomposition.m,
        decomposition.b_dim,
        decomposition.f_hdims,
    )
    return decomposition


def swap_layers(
    decomposition: JoyceDecomposition, i: int, j: int
) -> JoyceDecomposition:
    """Copy with layers i and j exchanged (breaks the recursion order)."""

    layers = list(decomposition.layers)
    layers[i], layers[j] = layers[j], layers[i]
    return JoyceDecomposition(
        ambient=decomposition.ambient,
        ell=decomposition.ell,
        rank=decomposition.rank,
        w_basis=decomposition.w_basis,
        layers=tuple(layers),
        label=decomposition.label,
        w_labels=decomposition.w_labels,
    )


__all__ = [
    "JoyceDecomposition",
    "JoyceLayer",
    "Quadruple",
    "canonical_b_coroots",
    "check_parameter_matrix",
    "joyce_decompose",
    "swap_layers",
]
