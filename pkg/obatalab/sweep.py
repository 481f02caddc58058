"""Holonomy along a curve of parameter matrices A_t."""

from __future__ import annotations

import csv
import logging

from dataclasses import dataclass, field
from pathlib import Path
from typing import Dict, List, Optional, Sequence, Tuple

from sympy import Expr, Rational as SympyRational, Symbol, sympify

from obatalab.catalog import GroupSpec, connection_for
from obatalab.constants import METHOD_FILTRATION
from obatalab.core.matrix import ExactMatrix
from obatalab.core.rational import Rational, format_rational, to_rational
from obatalab.exceptions import DimensionMismatchError, SingularParameterError
from obatalab.joyce.hypercomplex import ParameterMatrix
from obatalab.obata.holonomy import holonomy_algebra
from obatalab.obata.subspaces import find_parallel_subspaces

LOGGER = logging.getLogger(__name__)

T = Symbol("t")
CSV_COLUMNS = ("t", "det", "dim", "filtration", "parallel")


@dataclass(frozen=True)
class ParameterCurve:
    """Square matrix of rational functions of ``t``.

    Written like ``"t,1-t;1+t,-t"``: rows split on semicolons.
    """

    text: str
    entries: Tuple[Tuple[Expr, ...], ...]

    @classmethod
    def parse(cls, text: str) -> "ParameterCurve":
        rows: List[Tuple[Expr, ...]] = []
        for raw in text.split(";"):
            if not raw.strip():
                continue
            rows.append(
                tuple(
                    sympify(item.strip(), locals={"t": T}, rational=True)
                    for item in raw.split(",")
                )
            )
        if not rows or any(len(row) != len(rows) for row in rows):
            raise DimensionMismatchError(
                f"Curve '{text}' is not a square matrix"
            )
        for row in rows:
            for entry in row:
                extra = entry.free_symbols - {T}
                if extra:
                    names = sorted(str(symbol) for symbol in extra)
                    raise ValueError(
                        f"Curve entry {entry} depends on {names}"
                    )
        return cls(text=text, entries=tuple(rows))

    @property
    def m(self) -> int:
        return len(self.entries)

    def at(self, t: Rational) -> ExactMatrix:
        """A_t with exact entries; undefined entries raise
        :class:`SingularParameterError`."""

        point = SympyRational(int(t.numerator), int(t.denominator))
        rows: List[List[Rational]] = []
        for row in self.entries:
            values: List[Rational] = []
            for entry in row:
                value = entry.subs(T, point)
                if not value.is_Rational:
                    raise SingularParameterError(
                        f"{entry} is undefined at t={format_rational(t)}"
                    )
                values.append(to_rational(value))
            rows.append(values)
        return ExactMatrix(rows)


def parse_t_values(text: str) -> List[Rational]:
    return [to_rational(item) for item in text.split(",") if item.strip()]


@dataclass
class SweepRow:
    t: str
    det: str = ""
    skipped: bool = False
    reason: str = ""
    dim: Optional[int] = None
    filtration: List[int] = field(default_factory=list)
    stabilized: Optional[bool] = None
    parallel: List[str] = field(default_factory=list)

    def to_json(self) -> Dict[str, object]:
        return {
            "t": self.t,
            "det": self.det,
            "skipped": self.skipped,
            "reason": self.reason,
            "dim": self.dim,
            "filtration": list(self.filtration),
            "stabilized": self.stabilized,
            "parallel": list(self.parallel),
        }

    def to_csv_row(self) -> Dict[str, str]:
        return {
            "t": self.t,
            "det": self.det,
            "dim": "" if self.dim is None else str(self.dim),
            "filtration": " ".join(str(v) for v in self.filtration),
            "parallel": " ".join(self.parallel),
        }


@dataclass
class SweepResult:
    rows: List[SweepRow] = field(default_factory=list)

    @property
    def computed(self) -> List[SweepRow]:
        return [row for row in self.rows if not row.skipped]

    @property
    def jumps(self) -> List[str]:
        """t values where the holonomy dimension differs from the
        previous computed row."""

        found: List[str] = []
        previous: Optional[int] = None
        for row in self.computed:
            if previous is not None and row.dim != previous:
                found.append(row.t)
            previous = row.dim
        return found

    @property
    def stabilized(self) -> bool:
        return all(row.stabilized for row in self.computed)

    def to_json(self) -> Dict[str, object]:
        return {
            "rows": [row.to_json() for row in self.rows],
            "jumps": self.jumps,
            "skipped": [row.t for row in self.rows if row.skipped],
        }

    def write_csv(self, path: Path) -> Path:
        path.parent.mkdir(parents=True, exist_ok=True)
        with path.open("w", encoding="utf-8", newline="") as handle:
            writer = csv.DictWriter(handle, fieldnames=CSV_COLUMNS)
            writer.writeheader()
            for row in self.rows:
                writer.writerow(row.to_csv_row())
        return path


def sweep_holonomy(
    spec: GroupSpec,
    curve: ParameterCurve,
    t_values: Sequence[Rational],
    *,
    method: str = METHOD_FILTRATION,
    max_depth: int = 6,
    workers: Optional[int] = None,
    dim_cap: Optional[int] = None,
) -> SweepResult:
    result = SweepResult()
    for t in t_values:
        row = SweepRow(t=format_rational(t))
        result.rows.append(row)
        try:
            matrix = curve.at(t)
        except SingularParameterError as exc:
            row.skipped, row.reason = True, str(exc)
            LOGGER.warning("Skipping t=%s: %s", row.t, exc)
            continue
        det = matrix.det()
        row.det = format_rational(det)
        if not det:
            row.skipped, row.reason = True, "singular A_t"
            LOGGER.warning("Skipping t=%s: A_t is singular", row.t)
            continue
        connection = connection_for(spec, ParameterMatrix(matrix))
        holonomy = holonomy_algebra(
            connection,
            method,
            max_depth,
            workers=workers,
            dim_cap=dim_cap,
        )
        row.dim = holonomy.dim
        row.filtration = list(holonomy.filtration_dims)
        row.stabilized = holonomy.stabilized
        row.parallel = [
            s.label
            for s in find_parallel_subspaces(connection).proper_parallel
        ]
        LOGGER.info("t=%s: dim hol = %s", row.t, row.dim)
    return result


__all__ = [
    "CSV_COLUMNS",
    "ParameterCurve",
    "SweepResult",
    "SweepRow",
    "parse_t_values",
    "sweep_holonomy",
]
