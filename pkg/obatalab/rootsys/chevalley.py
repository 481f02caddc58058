"""Chevalley bases and their compact real forms.

Structure constants follow the extraspecial-pair recipe: for every
non-simple positive root the first pair (in root order) summing to it gets
``N = +(p + 1)``; the remaining special pairs follow from the Jacobi
identity, and all other signs from

    N_{b,a} = -N_{a,b},   N_{-a,-b} = -N_{a,b},
    N_{x,y}/(z,z) = N_{y,z}/(x,x) = N_{z,x}/(y,y)   when x + y + z = 0.

The complex brackets are evaluated over ``QQ_I`` and read back on the
compact basis ``t_j = i h_j``, ``u_a = x_a - x_-a``, ``v_a = i(x_a + x_-a)``.
"""

from __future__ import annotations

import logging

from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations
from typing import Dict, List, Optional, Tuple

from sympy.polys.domains import QQ_I

from obatalab.core.lie import LieAlgebraData
from obatalab.core.matrix import Vector
from obatalab.core.rational import QQ, ZERO
from obatalab.rootsys.roots import Root, RootSystem, build_root_system

LOGGER = logging.getLogger(__name__)

# basis keys of the complex Chevalley basis: ("h", i) or ("x", signed root)
ChevalleyKey = Tuple[str, object]
ComplexVector = Dict[ChevalleyKey, object]


def _neg(root: Root) -> Root:
    return tuple(-a for a in root)


def _add(x: Root, y: Root) -> Root:
    return tuple(a + b for a, b in zip(x, y))


def _is_positive(root: Root) -> bool:
    return any(a > 0 for a in root)


class StructureConstantTable:
    """N_{a,b} for all pairs of roots, from extraspecial pairs."""

    def __init__(self, rs: RootSystem) -> None:
        self.rs = rs
        self._special: Dict[Tuple[Root, Root], int] = {}
        self._build()

    def _norm(self, root: Root) -> int:
        return self.rs.inner(root, root)

    def _string_below(self, alpha: Root, beta: Root) -> int:
        """Largest p with beta - p alpha a root."""

        p = 0
        probe = beta
        while True:
            probe = _add(probe, _neg(alpha))
            if not self.rs.is_root(probe):
                return p
            p += 1

    def _build(self) -> None:
        rs = self.rs
        positive = rs.positive_roots
        extraspecial: Dict[Root, Tuple[Root, Root]] = {}
        for xi in positive:
            if sum(xi) == 1:
                continue
            for alpha in positive:
                rest = tuple(a - b for a, b in zip(xi, alpha))
                if rs.is_positive_root(rest):
                    extraspecial[xi] = (alpha, rest)
                    break
        # special pairs in order of their sum's height, so the recursion
        # only reads pairs with strictly lower sums
        pairs: List[Tuple[Root, Root]] = []
        for i, j in combinations(range(len(positive)), 2):
            alpha, beta = positive[i], positive[j]
            if rs.is_positive_root(_add(alpha, beta)):
                pairs.append((alpha, beta))
        pairs.sort(key=lambda ab: (sum(ab[0]) + sum(ab[1]), rs.index(ab[0])))
        for alpha, beta in pairs:
            xi = _add(alpha, beta)
            first, second = extraspecial[xi]
            if (alpha, beta) == (first, second):
                self._special[(alpha, beta)] = (
                    self._string_below(alpha, beta) + 1
                )
                continue
            total = QQ(0)
            diff = tuple(a - b for a, b in zip(beta, first))
            if rs.is_root(diff):
                total += QQ(
                    self.n(beta, _neg(first)) * self.n(alpha, _neg(second)),
                    self._norm(diff),
                )
            diff = tuple(a - b for a, b in zip(alpha, first))
            if rs.is_root(diff):
                total += QQ(
                    self.n(_neg(first), alpha) * self.n(beta, _neg(second)),
                    self._norm(diff),
                )
            value = total * self._norm(xi) / self._special[(first, second)]
            if value.denominator != 1:
                raise ArithmeticError(
                    f"Non-integral structure constant for {alpha}+{beta}"
                )
            self._special[(alpha, beta)] = int(value.numerator)

    def n(self, x: Root, y: Root) -> int:
        """N_{x,y}; zero when x + y is not a root."""

        total = _add(x, y)
        if not any(total) or not self.rs.is_root(total):
            return 0
        pos_x, pos_y = _is_positive(x), _is_positive(y)
        if pos_x and pos_y:
            if self.rs.index(x) < self.rs.index(y):
                return self._special[(x, y)]
            return -self._special[(y, x)]
        if not pos_x and not pos_y:
            return -self.n(_neg(x), _neg(y))
        if not pos_x:
            return -self.n(y, x)
        # x positive, y negative: rotate to a same-sign pair
        z = _neg(total)
        if _is_positive(z):
            value = QQ(self.n(z, x) * self._norm(z), self._norm(y))
        else:
            value = QQ(self.n(y, z) * self._norm(z), self._norm(x))
        return int(value.numerator)


@dataclass(frozen=True)
class ChevalleyRealization:
    """Compact real form with its root bookkeeping.

    Basis order: ``t_1..t_r`` then ``u_a, v_a`` for each positive root in
    root order. Matrix models with the same layout reuse this type.
    """

    root_system: RootSystem
    algebra: LieAlgebraData
    root_space_index: Dict[Root, Tuple[int, int]]
    cartan_index: Tuple[int, ...]
    label: str = ""

    @property
    def dim(self) -> int:
        return self.algebra.dim

    def cartan_vector(self, coroot_coords: Tuple[int, ...]) -> Vector:
        """Compact vector sum_j c_j t_j for integer coroot coordinates."""

        vec = [ZERO] * self.dim
        for j, c in enumerate(coroot_coords):
            if c:
                vec[self.cartan_index[j]] = QQ(c)
        return tuple(vec)

    def root_vector(self, root: Root, part: str = "u") -> Vector:
        u_idx, v_idx = self.root_space_index[root]
        vec = [ZERO] * self.dim
        vec[u_idx if part == "u" else v_idx] = QQ(1)
        return tuple(vec)

    def coroot_vector(self, root: Root) -> Vector:
        """t_root = i h_root on the compact basis."""

        return self.cartan_vector(self.root_system.coroot(root))


def compact_basis_labels(rs: RootSystem) -> List[str]:
    labels = [f"t{j + 1}" for j in range(rs.rank)]
    for root in rs.positive_roots:
        tag = "".join(str(a) for a in root)
        labels.extend([f"u{tag}", f"v{tag}"])
    return labels


class _ComplexBracket:
    """Brackets in the complex Chevalley basis."""

    def __init__(self, rs: RootSystem, table: StructureConstantTable):
        self.rs = rs
        self.table = table

    def basis(self, a: ChevalleyKey, b: ChevalleyKey) -> ComplexVector:
        rs = self.rs
        kind_a, key_a = a
        kind_b, key_b = b
        if kind_a == "h" and kind_b == "h":
            return {}
        if kind_a == "h":
            root = key_b
            weight = rs.pairing(root, key_a)  # type: ignore[arg-type]
            return {b: QQ_I(weight)} if weight else {}
        if kind_b == "h":
            return {k: -v for k, v in self.basis(b, a).items()}
        x, y = key_a, key_b
        total = _add(x, y)  # type: ignore[arg-type]
        if not any(total):
            # [x_a, x_-a] = h_a
            sign = 1 if _is_positive(x) else -1  # type: ignore[arg-type]
            coroot = rs.coroot(x if sign > 0 else _neg(x))  # type: ignore
            return {
                ("h", j): QQ_I(sign * c) for j, c in enumerate(coroot) if c
            }
        coeff = self.table.n(x, y)  # type: ignore[arg-type]
        return {("x", total): QQ_I(coeff)} if coeff else {}

    def bracket(self, left: ComplexVector, right: ComplexVector):
        out: ComplexVector = {}
        for a, ca in left.items():
            for b, cb in right.items():
                for key, value in self.basis(a, b).items():
                    updated = out.get(key, QQ_I(0)) + ca * cb * value
                    if updated.x or updated.y:
                        out[key] = updated
                    else:
                        out.pop(key, None)
        return out


def _compact_elements(rs: RootSystem) -> List[ComplexVector]:
    elements: List[ComplexVector] = [
        {("h", j): QQ_I(0, 1)} for j in range(rs.rank)
    ]
    for root in rs.positive_roots:
        neg = _neg(root)
        elements.append({("x", root): QQ_I(1), ("x", neg): QQ_I(-1)})
        elements.append({("x", root): QQ_I(0, 1), ("x", neg): QQ_I(0, 1)})
    return elements


def _to_compact(
    rs: RootSystem,
    value: ComplexVector,
    root_space_index: Dict[Root, Tuple[int, int]],
) -> Dict[int, object]:
    coords: Dict[int, object] = {}
    for (kind, key), z in value.items():
        if kind == "h":
            # z h_j = Im(z) t_j for a compact element
            if z.x:
                raise ArithmeticError("Bracket left the compact form")
            if z.y:
                coords[key] = z.y  # type: ignore[index]
    for root in rs.positive_roots:
        p = value.get(("x", root), QQ_I(0))
        q = value.get(("x", _neg(root)), QQ_I(0))
        u_idx, v_idx = root_space_index[root]
        a = (p.x - q.x) / 2
        b = (p.y + q.y) / 2
        if p.y - q.y or p.x + q.x:
            raise ArithmeticError("Bracket left the compact form")
        if a:
            coords[u_idx] = a
        if b:
            coords[v_idx] = b
    return coords


@lru_cache(maxsize=None)
def _realize(type_letter: str, rank: int) -> ChevalleyRealization:
    rs = build_root_system(type_letter, rank)
    table = StructureConstantTable(rs)
    engine = _ComplexBracket(rs, table)
    cartan_index = tuple(range(rs.rank))
    root_space_index = {
        root: (rs.rank + 2 * k, rs.rank + 2 * k + 1)
        for k, root in enumerate(rs.positive_roots)
    }
    elements = _compact_elements(rs)
    dim = len(elements)
    constants: Dict[Tuple[int, int], Dict[int, object]] = {}
    for i, j in combinations(range(dim), 2):
        value = engine.bracket(elements[i], elements[j])
        if value:
            constants[(i, j)] = _to_compact(rs, value, root_space_index)
    algebra = LieAlgebraData(dim, constants, compact_basis_labels(rs))
    LOGGER.info("Realized compact %s (dim %s)", rs.name, dim)
    return ChevalleyRealization(
        root_system=rs,
        algebra=algebra,
        root_space_index=root_space_index,
        cartan_index=cartan_index,
        label=f"compact {rs.name}",
    )


def chevalley_compact_form(
    rs: RootSystem, label: Optional[str] = None
) -> ChevalleyRealization:
    realization = _realize(rs.type_letter, rs.rank)
    if label:
        return ChevalleyRealization(
            root_system=realization.root_system,
            algebra=realization.algebra,
            root_space_index=realization.root_space_index,
            cartan_index=realization.cartan_index,
            label=label,
        )
    return realization


def structure_constant_table(rs: RootSystem) -> StructureConstantTable:
    return StructureConstantTable(rs)


__all__ = [
    "ChevalleyRealization",
    "StructureConstantTable",
    "chevalley_compact_form",
    "compact_basis_labels",
    "structure_constant_table",
]
