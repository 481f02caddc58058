"""Exact rational scalars.

All arithmetic runs on sympy's ``QQ`` domain, which is backed by
``gmpy2.mpq`` when gmpy2 is installed and by sympy's pure Python
``PythonMPQ`` otherwise. Both keep values in lowest terms with a positive
denominator.
"""

from __future__ import annotations

from math import lcm
from typing import Any, Iterable, List, Sequence, Union

from sympy import Rational as SympyRational, sympify
from sympy.polys.domains import QQ

from obatalab.exceptions import DimensionMismatchError

Rational = Any  # element of sympy's QQ domain (PythonMPQ or gmpy2.mpq)
RationalLike = Union[int, str, Rational, SympyRational]

ZERO = QQ(0)
ONE = QQ(1)


def to_rational(value: RationalLike) -> Rational:
    """Convert ints, strings such as ``"-3/4"`` and sympy numbers to QQ."""

    if isinstance(value, int):
        return QQ(value)
    if isinstance(value, str):
        parsed = SympyRational(sympify(value.strip(), rational=True))
        return QQ(int(parsed.p), int(parsed.q))
    if isinstance(value, SympyRational):
        return QQ(int(value.p), int(value.q))
    if hasattr(value, "numerator") and hasattr(value, "denominator"):
        return QQ(int(value.numerator), int(value.denominator))
    raise TypeError(f"Cannot interpret {value!r} as an exact rational")


def format_rational(value: Rational) -> str:
    """Render ``p`` or ``p/q`` for JSON output."""

    value = to_rational(value)
    num, den = int(value.numerator), int(value.denominator)
    if den == 1:
        return str(num)
    return f"{num}/{den}"


def format_vector(values: Iterable[Rational]) -> List[str]:
    return [format_rational(v) for v in values]


def parse_rational_matrix(text: str) -> List[List[Rational]]:
    """Parse ``"0,1;1,0"`` style rows into a rectangular rational array."""

    rows = [row for row in text.strip().split(";") if row.strip()]
    if not rows:
        raise ValueError("Matrix literal is empty")
    parsed = [[to_rational(entry) for entry in row.split(",")] for row in rows]
    width = len(parsed[0])
    if any(len(row) != width for row in parsed):
        raise DimensionMismatchError(
            f"Matrix literal '{text}' has ragged rows"
        )
    return parsed


def lcm_of_denominators(values: Sequence[Rational]) -> int:
    result = 1
    for value in values:
        if value:
            result = lcm(result, int(value.denominator))
    return result


__all__ = [
    "Rational",
    "RationalLike",
    "QQ",
    "ZERO",
    "ONE",
    "to_rational",
    "format_rational",
    "format_vector",
    "parse_rational_matrix",
    "lcm_of_denominators",
]
