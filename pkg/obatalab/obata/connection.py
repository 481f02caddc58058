"""The Obata connection of a left-invariant hypercomplex structure.

Everything is written on the hypercomplex frame of the triple, so
``nabla[k]`` is the matrix of ``Y -> nabla_{e_k} Y`` in frame coordinates.
"""

from __future__ import annotations

import logging

from dataclasses import dataclass
from typing import Dict, List, Optional, Sequence

from obatalab.core.lie import LieAlgebraData
from obatalab.core.matrix import ExactMatrix, Vector
from obatalab.core.rational import (
    ZERO,
    QQ,
    RationalLike,
    format_rational,
    to_rational,
)
from obatalab.exceptions import DimensionMismatchError, NotHypercomplexError
from obatalab.joyce.hypercomplex import STRUCTURE_NAMES, HypercomplexTriple
from obatalab.joyce.verifiers import verify_integrability
from obatalab.types import CheckFailure, VerifyResult

LOGGER = logging.getLogger(__name__)

HALF = QQ(1, 2)


@dataclass(frozen=True)
class Connection:
    """Left-invariant connection given by one matrix per basis vector."""

    nabla: tuple
    algebra: LieAlgebraData
    triple: Optional[HypercomplexTriple] = None

    @property
    def dim(self) -> int:
        return self.algebra.dim

    def along(self, x: Sequence[RationalLike]) -> ExactMatrix:
        """nabla_x = sum_k x_k nabla_{e_k}."""

        if len(x) != self.dim:
            raise DimensionMismatchError("Direction has the wrong length")
        total = ExactMatrix.zeros(self.dim)
        for coeff, matrix in zip(x, self.nabla):
            if coeff:
                total = total + matrix.scale(coeff)
        return total

    def derivative(
        self, x: Sequence[RationalLike], y: Sequence[RationalLike]
    ) -> Vector:
        return self.along(x).apply(y)

    def with_perturbed_entry(
        self, k: int, row: int, col: int, delta: RationalLike = 1
    ) -> "Connection":
        """Copy with one entry of nabla_{e_k} shifted by ``delta``."""

        rows = self.nabla[k].to_rows()
        rows[row][col] += to_rational(delta)
        nabla = list(self.nabla)
        nabla[k] = ExactMatrix(rows)
        return Connection(tuple(nabla), self.algebra, self.triple)


def obata_connection(
    g: LieAlgebraData,
    h: HypercomplexTriple,
    *,
    check_integrability: bool = True,
) -> Connection:
    """nabla_X Y = 1/2([X,Y] + I[IX,Y] - J[X,JY] + K[IX,JY]).

    Refuses triples whose Nijenhuis tensors do not vanish.
    """

    if g.dim != h.dim:
        raise DimensionMismatchError("Triple and algebra differ in dimension")
    if check_integrability:
        report = verify_integrability(h, g)
        if not report.passed:
            raise NotHypercomplexError(
                "Almost hypercomplex structure is not integrable: "
                f"{report.first_failure}"
            )
    I, J, K = h.I, h.J, h.K
    nabla: List[ExactMatrix] = []
    for k in range(g.dim):
        ad_x = g.ad_basis[k]
        ad_ix = g.ad(I.column(k))
        matrix = ad_x + I @ ad_ix - J @ ad_x @ J + K @ ad_ix @ J
        nabla.append(matrix.scale(HALF))
    LOGGER.info("Obata connection built on dimension %s", g.dim)
    return Connection(tuple(nabla), g, h)


# checks ---------------------------------------------------------------


def verify_torsion_free(c: Connection) -> VerifyResult:
    g = c.algebra
    failures: List[CheckFailure] = []
    checked = 0
    for i in range(g.dim):
        for j in range(i + 1, g.dim):
            checked += 1
            lhs = [
                a - b
                for a, b in zip(c.nabla[i].column(j), c.nabla[j].column(i))
            ]
            if tuple(lhs) != g.bracket(g.unit(i), g.unit(j)):
                failures.append(
                    CheckFailure("torsion", (i, j), "T(e_i, e_j) != 0")
                )
    return VerifyResult.from_failures(
        "torsion_free", failures, checked=checked
    )


def verify_parallel_structures(c: Connection) -> VerifyResult:
    """nabla I = nabla J = nabla K = 0, i.e. [nabla_{e_k}, L] = 0."""

    if c.triple is None:
        raise NotHypercomplexError("Connection carries no hypercomplex triple")
    failures: List[CheckFailure] = []
    checked = 0
    for name in STRUCTURE_NAMES:
        L = c.triple.structure(name)
        for k, matrix in enumerate(c.nabla):
            checked += 1
            if not matrix.commutator(L).is_zero():
                failures.append(
                    CheckFailure(f"nabla_{name}", (k,), "not parallel")
                )
    return VerifyResult.from_failures(
        "parallel_structures", failures, checked=checked
    )


def _layer_of(slices: Sequence[tuple], index: int) -> int:
    for layer, (start, stop) in enumerate(slices):
        if start <= index < stop:
            return layer
    raise DimensionMismatchError(f"Frame index {index} outside every layer")


def verify_nabla_e1(c: Connection) -> VerifyResult:
    """nabla_X e1^i = -X for X in h_i + f_i and 0 otherwise."""

    if c.triple is None:
        raise NotHypercomplexError("Connection carries no hypercomplex triple")
    slices = c.triple.decomposition.layer_slices()
    failures: List[CheckFailure] = []
    checked = 0
    for i, (start, _) in enumerate(slices):
        for k in range(c.dim):
            checked += 1
            expected = [ZERO] * c.dim
            if _layer_of(slices, k) == i:
                expected[k] = QQ(-1)
            if c.nabla[k].column(start) != tuple(expected):
                failures.append(
                    CheckFailure("nabla_e1", (i, k), "formula violated")
                )
    return VerifyResult.from_failures("nabla_e1", failures, checked=checked)


def euler_field(c: Connection) -> Vector:
    """E = -sum_j e1^j in frame coordinates."""

    if c.triple is None:
        raise NotHypercomplexError("Connection carries no hypercomplex triple")
    vec = [ZERO] * c.dim
    for index in c.triple.e1_indices():
        vec[index] = QQ(-1)
    return tuple(vec)


def verify_euler_field(c: Connection) -> VerifyResult:
    """nabla E = Id."""

    field = euler_field(c)
    failures = [
        CheckFailure("euler", (k,), "nabla_{e_k} E != e_k")
        for k in range(c.dim)
        if c.nabla[k].apply(field) != c.algebra.unit(k)
    ]
    return VerifyResult.from_failures("euler", failures, checked=c.dim)


def dual_labels(labels: Sequence[str]) -> List[str]:
    """Frame labels e^i_j, f^i_l -> dual labels phi^i_j, psi^i_l."""

    out: List[str] = []
    for label in labels:
        if label.startswith("e^"):
            out.append("phi" + label[1:])
        elif label.startswith("f^"):
            out.append("psi" + label[1:])
        else:
            out.append(f"{label}*")
    return out


def connection_form(c: Connection) -> List[List[Dict[str, str]]]:
    """Matrix of 1-forms: entry (r, s) is sum_k nabla_{e_k}[r, s] e^k."""

    names = dual_labels(c.algebra.labels)
    form: List[List[Dict[str, str]]] = []
    for r in range(c.dim):
        row: List[Dict[str, str]] = []
        for s in range(c.dim):
            entry = {
                names[k]: format_rational(matrix[r, s])
                for k, matrix in enumerate(c.nabla)
                if matrix[r, s]
            }
            row.append(entry)
        form.append(row)
    return form


__all__ = [
    "Connection",
    "connection_form",
    "dual_labels",
    "euler_field",
    "obata_connection",
    "verify_euler_field",
    "verify_nabla_e1",
    "verify_parallel_structures",
    "verify_torsion_free",
]
