"""Checks of the structural identities of a Joyce decomposition."""

from __future__ import annotations

import logging

from itertools import product
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

from obatalab.core.lie import LieAlgebraData
from obatalab.core.matrix import ExactMatrix, Vector
from obatalab.core.span import SpanBasis, span_of
from obatalab.joyce.decomposition import JoyceDecomposition, JoyceLayer
from obatalab.joyce.hypercomplex import (
    STRUCTURE_NAMES,
    HypercomplexTriple,
    quaternion_relations,
)
from obatalab.types import CheckFailure, VerifyResult

LOGGER = logging.getLogger(__name__)

Indexed = List[Tuple[int, Vector]]


def _scale(vector: Sequence, factor: int) -> Vector:
    return tuple(factor * v for v in vector)


def _indexed(vectors: Iterable[Vector]) -> Indexed:
    return list(enumerate(vectors))


def _check_vanishing(
    g: LieAlgebraData,
    name: str,
    left: Indexed,
    right: Indexed,
    failures: List[CheckFailure],
) -> int:
    checked = 0
    for (i, x), (j, y) in product(left, right):
        checked += 1
        if any(g.bracket(x, y)):
            failures.append(CheckFailure(name, (i, j), "bracket is nonzero"))
    return checked


def _check_inclusion(
    g: LieAlgebraData,
    name: str,
    left: Indexed,
    right: Indexed,
    target: SpanBasis,
    failures: List[CheckFailure],
) -> int:
    checked = 0
    for (i, x), (j, y) in product(left, right):
        checked += 1
        if not target.contains(g.bracket(x, y)):
            failures.append(
                CheckFailure(name, (i, j), "bracket leaves the target span")
            )
    return checked


def _triple_failures(
    g: LieAlgebraData, index: int, layer: JoyceLayer
) -> List[CheckFailure]:
    failures: List[CheckFailure] = []
    e2, e3, e4 = layer.e2, layer.e3, layer.e4
    for (x, y, z, tag) in (
        (e2, e3, e4, "[e2,e3]=2e4"),
        (e4, e2, e3, "[e4,e2]=2e3"),
        (e3, e4, e2, "[e3,e4]=2e2"),
    ):
        if g.bracket(x, y) != _scale(z, 2):
            failures.append(CheckFailure("su2_triple", (index,), tag))
    return failures


def verify_joyce_relations(d: JoyceDecomposition) -> VerifyResult:
    """J1 to J4 plus the su(2) normalization of each d_i."""

    g = d.ambient
    failures: Dict[str, List[CheckFailure]] = {
        key: [] for key in ("su2", "J1", "J2", "J3", "J4", "orthogonal")
    }
    checked = 0
    w = _indexed(d.w_basis)
    for i, layer in enumerate(d.layers):
        failures["su2"].extend(_triple_failures(g, i, layer))
        d_i = _indexed(layer.d_vectors)
        checked += _check_vanishing(g, "J1", d_i, w, failures["J1"])
        for j, other in enumerate(d.layers):
            if j == i:
                continue
            checked += _check_vanishing(
                g, "J2", d_i, _indexed(other.d_vectors), failures["J2"]
            )
            if i < j:
                checked += _check_vanishing(
                    g, "J3", d_i, _indexed(other.f_vectors), failures["J3"]
                )
        f_i = layer.f_vectors
        target = span_of(f_i, g.dim)
        checked += _check_inclusion(
            g, "J4", d_i, _indexed(f_i), target, failures["J4"]
        )
        for k, f in enumerate(f_i):
            # ad(e2)^2 = -Id on f_i
            if g.bracket(layer.e2, g.bracket(layer.e2, f)) != _scale(f, -1):
                failures["J4"].append(
                    CheckFailure("J4", (i, k), "ad(e2)^2 != -Id on f")
                )
    failures["orthogonal"].extend(_orthogonality_failures(d))
    results = {
        key: VerifyResult.from_failures(key, items, checked=checked)
        for key, items in failures.items()
    }
    combined = VerifyResult.combine("joyce_relations", results)
    LOGGER.info(
        "Joyce relations on %s: %s",
        d.label,
        "pass" if combined.passed else "fail",
    )
    return combined


def _orthogonality_failures(d: JoyceDecomposition) -> List[CheckFailure]:
    """Summands are orthogonal for B on g plus the Euclidean torus form."""

    g = d.ambient
    form = g.killing_form()
    ell = d.ell
    gram_rows = form.to_rows()
    for k in range(ell):
        gram_rows[k][k] = gram_rows[k][k] + 1
    gram = ExactMatrix(gram_rows)
    groups: List[List[Vector]] = [list(d.w_basis)]
    for layer in d.layers:
        groups.append(layer.d_vectors)
        if layer.f_quadruples:
            groups.append(layer.f_vectors)
    failures: List[CheckFailure] = []
    for a in range(len(groups)):
        for b in range(a + 1, len(groups)):
            for x in groups[a]:
                gx = gram.apply(x)
                for y in groups[b]:
                    if sum((p * q for p, q in zip(gx, y)), 0):
                        failures.append(
                            CheckFailure(
                                "orthogonal", (a, b), "summands not orthogonal"
                            )
                        )
                        break
    return failures


def verify_bracket_inclusions(d: JoyceDecomposition) -> VerifyResult:
    """[b,f_j] in f_j; [d_i,f_j] in f_j (i>j); [f_i,f_j] in f_i (i<j);
    [f_i,f_i] in b + sum_{k>=i} (d_k + f_k)."""

    g = d.ambient
    failures: Dict[str, List[CheckFailure]] = {
        key: [] for key in ("1", "2", "3", "4")
    }
    checked = 0
    w = _indexed(d.w_basis)
    layers = d.layers
    for j, layer in enumerate(layers):
        f_j = _indexed(layer.f_vectors)
        if not f_j:
            continue
        span_fj = span_of(layer.f_vectors, g.dim)
        checked += _check_inclusion(g, "1", w, f_j, span_fj, failures["1"])
        for i in range(j + 1, len(layers)):
            checked += _check_inclusion(
                g,
                "2",
                _indexed(layers[i].d_vectors),
                f_j,
                span_fj,
                failures["2"],
            )
    for i, layer in enumerate(layers):
        f_i = _indexed(layer.f_vectors)
        if not f_i:
            continue
        span_fi = span_of(layer.f_vectors, g.dim)
        for j in range(i + 1, len(layers)):
            checked += _check_inclusion(
                g,
                "3",
                f_i,
                _indexed(layers[j].f_vectors),
                span_fi,
                failures["3"],
            )
        tail: List[Vector] = list(d.w_basis)
        for later in layers[i:]:
            tail.extend(later.d_vectors)
            tail.extend(later.f_vectors)
        checked += _check_inclusion(
            g, "4", f_i, f_i, span_of(tail, g.dim), failures["4"]
        )
    results = {
        f"statement_{key}": VerifyResult.from_failures(
            f"statement_{key}", items, checked=checked
        )
        for key, items in failures.items()
    }
    return VerifyResult.combine("bracket_inclusions", results)


def nijenhuis(
    g: LieAlgebraData, L: ExactMatrix, x: Vector, y: Vector
) -> Vector:
    """N_L(x,y) = [Lx,Ly] - L[Lx,y] - L[x,Ly] - [x,y]."""

    lx, ly = L.apply(x), L.apply(y)
    first = g.bracket(lx, ly)
    second = L.apply(g.bracket(lx, y))
    third = L.apply(g.bracket(x, ly))
    fourth = g.bracket(x, y)
    return tuple(
        a - b - c - e for a, b, c, e in zip(first, second, third, fourth)
    )


def verify_integrability(
    h: HypercomplexTriple, g: Optional[LieAlgebraData] = None
) -> VerifyResult:
    """Nijenhuis tensors of I, J, K vanish on all basis pairs."""

    algebra = g or h.algebra
    results: Dict[str, VerifyResult] = {}
    relations = quaternion_relations(h)
    results["quaternion"] = VerifyResult.from_failures(
        "quaternion",
        [
            CheckFailure("quaternion", (), name)
            for name, ok in relations.items()
            if not ok
        ],
        checked=len(relations),
    )
    for name in STRUCTURE_NAMES:
        L = h.structure(name)
        failures: List[CheckFailure] = []
        checked = 0
        for a in range(algebra.dim):
            for b in range(a + 1, algebra.dim):
                checked += 1
                value = nijenhuis(algebra, L, algebra.unit(a), algebra.unit(b))
                if any(value):
                    failures.append(
                        CheckFailure(
                            f"N_{name}", (a, b), "Nijenhuis tensor nonzero"
                        )
                    )
        results[f"N_{name}"] = VerifyResult.from_failures(
            f"N_{name}", failures, checked=checked
        )
    return VerifyResult.combine("integrability", results)


def hyperholomorphic_check(
    d: JoyceDecomposition,
    h: HypercomplexTriple,
    vectors: Optional[Sequence[Vector]] = None,
) -> VerifyResult:
    """ad_b commutes with I, J, K for b in the torus + b directions.

    ``vectors`` are ambient coordinates; defaults to the w basis of ``d``.
    """

    candidates = vectors if vectors is not None else d.w_basis
    failures: List[CheckFailure] = []
    checked = 0
    for idx, vector in enumerate(candidates):
        ad_b = h.algebra.ad(h.to_frame(vector))
        for name in STRUCTURE_NAMES:
            checked += 1
            L = h.structure(name)
            if not ad_b.commutator(L).is_zero():
                failures.append(
                    CheckFailure(
                        "hyperholomorphic",
                        (idx,),
                        f"ad_b does not commute with {name}",
                    )
                )
    return VerifyResult.from_failures(
        "hyperholomorphic", failures, checked=checked
    )


__all__ = [
    "hyperholomorphic_check",
    "nijenhuis",
    "verify_bracket_inclusions",
    "verify_integrability",
    "verify_joyce_relations",
]
