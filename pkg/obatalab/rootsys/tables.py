"""Closed-form trivial-summand counts and torus dimensions per family."""

from __future__ import annotations

import logging

from dataclasses import dataclass
from typing import Dict, List, Optional, Tuple

from obatalab.constants import (
    FAMILY_E6,
    FAMILY_E7,
    FAMILY_E8,
    FAMILY_F4,
    FAMILY_G2,
    FAMILY_SO,
    FAMILY_SP,
    FAMILY_SU,
)
from obatalab.exceptions import GroupSpecError
from obatalab.rootsys.diagram import (
    DiagramDecomposition,
    diagram_joyce_decomposition,
    wolf_quaternionic_dim,
)

LOGGER = logging.getLogger(__name__)

_EXCEPTIONAL: Dict[str, Tuple[str, int, int, int]] = {
    # family: (type, rank, trivial f count, torus dim)
    FAMILY_E6: ("E", 6, 1, 2),
    FAMILY_E7: ("E", 7, 4, 7),
    FAMILY_E8: ("E", 8, 4, 8),
    FAMILY_F4: ("F", 4, 1, 4),
    FAMILY_G2: ("G", 2, 1, 2),
}


def group_name(family: str, n: int) -> str:
    if family in _EXCEPTIONAL:
        return family.upper()
    return f"{family.upper()}({n})"


def root_type_for_group(family: str, n: int) -> Tuple[str, int]:
    """Type letter and rank of SU(n), SO(n), Sp(n) or an exceptional."""

    if family in _EXCEPTIONAL:
        letter, rank, _, _ = _EXCEPTIONAL[family]
        return letter, rank
    if family == FAMILY_SU:
        if n < 2:
            raise GroupSpecError("SU(n) needs n >= 2")
        return "A", n - 1
    if family == FAMILY_SP:
        if n < 2:
            raise GroupSpecError("Sp(1) is SU(2); use --family su --n 2")
        return "C", n
    if family == FAMILY_SO:
        if n % 2:
            if n < 5:
                raise GroupSpecError("SO(2k+1) needs k >= 2")
            return "B", (n - 1) // 2
        if n < 8:
            raise GroupSpecError("SO(2k) needs 2k >= 8")
        return "D", n // 2
    raise GroupSpecError(f"Unknown family '{family}'")


def closed_form_trivial_count(family: str, n: int) -> int:
    """Trivial f-summand count from the classification table."""

    if family in _EXCEPTIONAL:
        return _EXCEPTIONAL[family][2]
    letter, k = root_type_for_group(family, n)
    if letter == "A":
        return 1 if n % 2 == 0 else 0
    if letter == "B":
        return (k + 1) // 2
    if letter == "C":
        return 1
    # SO(4k) gives k + 1, SO(4k + 2) gives k
    return n // 4 + 1 if n % 4 == 0 else (n - 2) // 4


def expected_torus_dim(family: str, n: int) -> int:
    """ell = 2m - r as listed in the classification."""

    if family in _EXCEPTIONAL:
        return _EXCEPTIONAL[family][3]
    letter, k = root_type_for_group(family, n)
    if letter == "A":
        return 1 if n % 2 == 0 else 0
    if letter in ("B", "C"):
        return k
    return n // 2 if n % 4 == 0 else n // 2 - 2


@dataclass(frozen=True)
class TableRow:
    family: str
    n: int
    decomposition: DiagramDecomposition
    expected_trivial: int
    expected_torus: int
    wolf_hdim: int

    @property
    def group(self) -> str:
        return group_name(self.family, self.n)

    @property
    def matches(self) -> bool:
        return (
            self.decomposition.trivial_f_count == self.expected_trivial
            and self.decomposition.ell == self.expected_torus
            and self.decomposition.steps[0].f_hdim == self.wolf_hdim
        )

    def to_json(self) -> Dict[str, object]:
        return {
            "group": self.group,
            "family": self.family,
            "n": self.n,
            "decomposition": self.decomposition.to_json(),
            "expected_trivial_f": self.expected_trivial,
            "expected_ell": self.expected_torus,
            "wolf_hdim": self.wolf_hdim,
            "matches": self.matches,
        }


def table_row(family: str, n: int) -> TableRow:
    letter, rank = root_type_for_group(family, n)
    return TableRow(
        family=family,
        n=n,
        decomposition=diagram_joyce_decomposition(letter, rank),
        expected_trivial=closed_form_trivial_count(family, n),
        expected_torus=expected_torus_dim(family, n),
        wolf_hdim=wolf_quaternionic_dim(letter, rank),
    )


def table1_groups(max_rank: int) -> List[Tuple[str, int]]:
    """Every classical group of rank <= max_rank plus the exceptionals."""

    groups: List[Tuple[str, int]] = []
    groups.extend((FAMILY_SU, n) for n in range(2, max_rank + 2))
    groups.extend(
        (FAMILY_SO, 2 * k + 1) for k in range(2, max_rank + 1)
    )
    groups.extend((FAMILY_SP, k) for k in range(2, max_rank + 1))
    groups.extend((FAMILY_SO, 2 * k) for k in range(4, max_rank + 1))
    groups.extend(
        (family, spec[1]) for family, spec in _EXCEPTIONAL.items()
    )
    return groups


def table1(
    max_rank: int, families: Optional[List[str]] = None
) -> List[TableRow]:
    rows = [
        table_row(family, n)
        for family, n in table1_groups(max_rank)
        if families is None or family in families
    ]
    mismatches = [row.group for row in rows if not row.matches]
    if mismatches:
        LOGGER.warning("Rows disagree with closed forms: %s", mismatches)
    return rows


__all__ = [
    "TableRow",
    "closed_form_trivial_count",
    "expected_torus_dim",
    "group_name",
    "root_type_for_group",
    "table1",
    "table1_groups",
    "table_row",
]
