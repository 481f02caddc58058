"""Left-invariant differential forms and the Chevalley-Eilenberg
differential."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Dict, Iterable, List, Sequence, Tuple

from obatalab.core.lie import LieAlgebraData
from obatalab.core.matrix import ExactMatrix
from obatalab.core.rational import (
    ZERO,
    Rational,
    RationalLike,
    format_rational,
    to_rational,
)

Multi = Tuple[int, ...]


def _merge_sign(left: Multi, right: Multi) -> Tuple[int, Multi]:
    """Sign of sorting left + right, or 0 when an index repeats."""

    if set(left) & set(right):
        return 0, ()
    inversions = sum(1 for a in left for b in right if a > b)
    return (-1 if inversions % 2 else 1), tuple(sorted(left + right))


@dataclass(frozen=True)
class LeftInvariantForm:
    """sum_I c_I e^I over increasing multi-indices I."""

    degree: int
    coefficients: Dict[Multi, Rational] = field(default_factory=dict)

    @classmethod
    def build(
        cls, degree: int, terms: Iterable[Tuple[Multi, RationalLike]]
    ) -> "LeftInvariantForm":
        coeffs: Dict[Multi, Rational] = {}
        for idx, value in terms:
            if len(idx) != degree:
                raise ValueError(f"Multi-index {idx} has the wrong degree")
            if len(set(idx)) != len(idx):
                continue
            sign = _permutation_sign(idx)
            key = tuple(sorted(idx))
            updated = coeffs.get(key, ZERO) + sign * to_rational(value)
            if updated:
                coeffs[key] = updated
            else:
                coeffs.pop(key, None)
        return cls(degree, coeffs)

    @classmethod
    def dual(cls, index: int) -> "LeftInvariantForm":
        return cls(1, {(index,): to_rational(1)})

    @classmethod
    def zero(cls, degree: int) -> "LeftInvariantForm":
        return cls(degree, {})

    @classmethod
    def from_values(
        cls, values: Sequence[RationalLike]
    ) -> "LeftInvariantForm":
        """1-form with alpha(e_k) = values[k]."""

        return cls.build(
            1, (((k,), v) for k, v in enumerate(values) if v)
        )

    @classmethod
    def from_bilinear(cls, matrix: ExactMatrix) -> "LeftInvariantForm":
        """2-form with alpha(e_i, e_j) = matrix[i, j] (antisymmetric)."""

        return cls.build(
            2,
            (
                ((i, j), matrix[i, j])
                for i in range(matrix.rows)
                for j in range(i + 1, matrix.cols)
                if matrix[i, j]
            ),
        )

    def is_zero(self) -> bool:
        return not self.coefficients

    def __add__(self, other: "LeftInvariantForm") -> "LeftInvariantForm":
        if self.is_zero():
            return other
        if other.is_zero():
            return self
        if self.degree != other.degree:
            raise ValueError("Cannot add forms of different degrees")
        coeffs = dict(self.coefficients)
        for key, value in other.coefficients.items():
            updated = coeffs.get(key, ZERO) + value
            if updated:
                coeffs[key] = updated
            else:
                coeffs.pop(key, None)
        return LeftInvariantForm(self.degree, coeffs)

    def __neg__(self) -> "LeftInvariantForm":
        return self.scale(-1)

    def __sub__(self, other: "LeftInvariantForm") -> "LeftInvariantForm":
        return self + (-other)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, LeftInvariantForm):
            return NotImplemented
        if self.is_zero() and other.is_zero():
            return True
        return (
            self.degree == other.degree
            and self.coefficients == other.coefficients
        )

    def __hash__(self) -> int:
        return hash((self.degree, tuple(sorted(self.coefficients.items()))))

    def scale(self, factor: RationalLike) -> "LeftInvariantForm":
        f = to_rational(factor)
        if not f:
            return LeftInvariantForm(self.degree, {})
        return LeftInvariantForm(
            self.degree, {k: v * f for k, v in self.coefficients.items()}
        )

    def wedge(self, other: "LeftInvariantForm") -> "LeftInvariantForm":
        coeffs: Dict[Multi, Rational] = {}
        for a, x in self.coefficients.items():
            for b, y in other.coefficients.items():
                sign, key = _merge_sign(a, b)
                if not sign:
                    continue
                updated = coeffs.get(key, ZERO) + sign * x * y
                if updated:
                    coeffs[key] = updated
                else:
                    coeffs.pop(key, None)
        return LeftInvariantForm(self.degree + other.degree, coeffs)

    def evaluate(self, *indices: int) -> Rational:
        """alpha(e_{i1}, ..., e_{ik}) on basis vectors."""

        if len(indices) != self.degree:
            raise ValueError("Wrong number of arguments")
        if len(set(indices)) != len(indices):
            return ZERO
        key = tuple(sorted(indices))
        return _permutation_sign(indices) * self.coefficients.get(key, ZERO)

    def values(self, dim: int) -> List[Rational]:
        """Components of a 1-form."""

        if self.degree != 1:
            raise ValueError("Component vector only for 1-forms")
        return [self.coefficients.get((k,), ZERO) for k in range(dim)]

    def to_json(self) -> Dict[str, object]:
        return {
            "degree": self.degree,
            "terms": [
                {"idx": list(key), "coef": format_rational(value)}
                for key, value in sorted(self.coefficients.items())
            ],
        }


def _permutation_sign(indices: Sequence[int]) -> int:
    inversions = sum(
        1
        for a in range(len(indices))
        for b in range(a + 1, len(indices))
        if indices[a] > indices[b]
    )
    return -1 if inversions % 2 else 1


def wedge(*forms: LeftInvariantForm) -> LeftInvariantForm:
    result = LeftInvariantForm(0, {(): to_rational(1)})
    for form in forms:
        result = result.wedge(form)
    return result


def _dual_differentials(
    g: LieAlgebraData,
) -> Dict[int, LeftInvariantForm]:
    """d e^a = -sum_{i<j} c_ij^a e^i ^ e^j."""

    terms: Dict[int, Dict[Multi, Rational]] = {}
    for (i, j), vec in g.structure_constants.items():
        for a, c in vec.items():
            entry = terms.setdefault(a, {})
            entry[(i, j)] = entry.get((i, j), ZERO) - c
    return {a: LeftInvariantForm(2, coeffs) for a, coeffs in terms.items()}


def ce_differential(
    g: LieAlgebraData, form: LeftInvariantForm
) -> LeftInvariantForm:
    """Chevalley-Eilenberg differential, extended by the Leibniz rule."""

    differentials = _dual_differentials(g)
    result = LeftInvariantForm.zero(form.degree + 1)
    for key, coeff in form.coefficients.items():
        for slot, a in enumerate(key):
            da = differentials.get(a)
            if da is None:
                continue
            before = LeftInvariantForm(slot, {key[:slot]: to_rational(1)})
            after = LeftInvariantForm(
                len(key) - slot - 1, {key[slot + 1:]: to_rational(1)}
            )
            sign = -1 if slot % 2 else 1
            term = before.wedge(da).wedge(after).scale(sign * coeff)
            result = result + term
    return result


def pullback(
    form: LeftInvariantForm, matrix: ExactMatrix
) -> LeftInvariantForm:
    """(M^* alpha)(x_1..x_k) = alpha(M x_1, .., M x_k)."""

    images = {
        a: LeftInvariantForm.from_values(matrix.row(a))
        for a in range(matrix.rows)
    }
    result = LeftInvariantForm.zero(form.degree)
    for key, coeff in form.coefficients.items():
        term = wedge(*(images[a] for a in key)).scale(coeff)
        result = result + term
    return result


@dataclass(frozen=True)
class ComplexForm:
    """Complex-valued form as a pair of real forms."""

    real: LeftInvariantForm
    imag: LeftInvariantForm

    @property
    def degree(self) -> int:
        return max(self.real.degree, self.imag.degree)

    def wedge(self, other: "ComplexForm") -> "ComplexForm":
        return ComplexForm(
            self.real.wedge(other.real) - self.imag.wedge(other.imag),
            self.real.wedge(other.imag) + self.imag.wedge(other.real),
        )

    def left_wedge(self, alpha: LeftInvariantForm) -> "ComplexForm":
        """alpha ^ self for a real form alpha."""

        return ComplexForm(alpha.wedge(self.real), alpha.wedge(self.imag))

    def differential(self, g: LieAlgebraData) -> "ComplexForm":
        return ComplexForm(
            ce_differential(g, self.real), ce_differential(g, self.imag)
        )

    def power(self, n: int) -> "ComplexForm":
        result = ComplexForm(
            LeftInvariantForm(0, {(): to_rational(1)}),
            LeftInvariantForm.zero(0),
        )
        for _ in range(n):
            result = result.wedge(self)
        return result

    def is_zero(self) -> bool:
        return self.real.is_zero() and self.imag.is_zero()

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, ComplexForm):
            return NotImplemented
        return self.real == other.real and self.imag == other.imag

    def __hash__(self) -> int:
        return hash((self.real, self.imag))

    def to_json(self) -> Dict[str, object]:
        return {"re": self.real.to_json(), "im": self.imag.to_json()}


__all__ = [
    "ComplexForm",
    "LeftInvariantForm",
    "ce_differential",
    "pullback",
    "wedge",
]
