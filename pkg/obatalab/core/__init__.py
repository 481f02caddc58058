"""Exact linear algebra kernel and structure-constant Lie algebras."""

from .lie import (
    LieAlgebraData,
    abelian,
    bracket,
    is_positive_definite,
    killing_form,
    verify_jacobi,
)
from .matrix import ExactMatrix, Vector, rank, stack_columns
from .rational import (
    ONE,
    QQ,
    ZERO,
    Rational,
    format_rational,
    parse_rational_matrix,
    to_rational,
)
from .span import SpanBasis, span_insert, span_of

__all__ = [
    "ExactMatrix",
    "LieAlgebraData",
    "ONE",
    "QQ",
    "Rational",
    "SpanBasis",
    "Vector",
    "ZERO",
    "abelian",
    "bracket",
    "format_rational",
    "is_positive_definite",
    "killing_form",
    "parse_rational_matrix",
    "rank",
    "span_insert",
    "span_of",
    "stack_columns",
    "to_rational",
    "verify_jacobi",
]
