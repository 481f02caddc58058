"""Dense exact matrices over QQ."""

from __future__ import annotations

from typing import Iterable, List, Optional, Sequence, Tuple

from obatalab.core.rational import (
    ONE,
    QQ,
    ZERO,
    Rational,
    RationalLike,
    format_rational,
    lcm_of_denominators,
    to_rational,
)
from obatalab.exceptions import (
    DimensionMismatchError,
    SingularParameterError,
)

Vector = Tuple[Rational, ...]


class ExactMatrix:
    """Immutable row-major matrix of exact rationals.

    Entries are sympy ``QQ`` elements. Products skip zero entries, which
    keeps connection and curvature matrices (mostly zeros) cheap.
    """

    __slots__ = ("rows", "cols", "_data", "_hash")

    def __init__(self, entries: Sequence[Sequence[RationalLike]]) -> None:
        data = tuple(
            tuple(to_rational(value) for value in row) for row in entries
        )
        cols = len(data[0]) if data else 0
        if any(len(row) != cols for row in data):
            raise DimensionMismatchError("Matrix rows have unequal lengths")
        self._init(data, len(data), cols)

    def _init(
        self, data: Tuple[Vector, ...], rows: int, cols: int
    ) -> None:
        self.rows = rows
        self.cols = cols
        self._data = data
        self._hash: Optional[int] = None

    @classmethod
    def _raw(
        cls, data: Sequence[Sequence[Rational]], rows: int, cols: int
    ) -> "ExactMatrix":
        obj = cls.__new__(cls)
        obj._init(tuple(tuple(row) for row in data), rows, cols)
        return obj

    # construction -----------------------------------------------------

    @classmethod
    def zeros(cls, rows: int, cols: Optional[int] = None) -> "ExactMatrix":
        cols = rows if cols is None else cols
        return cls._raw([[ZERO] * cols for _ in range(rows)], rows, cols)

    @classmethod
    def identity(cls, n: int) -> "ExactMatrix":
        return cls.diagonal([ONE] * n)

    @classmethod
    def diagonal(cls, values: Sequence[RationalLike]) -> "ExactMatrix":
        n = len(values)
        data = [[ZERO] * n for _ in range(n)]
        for i, value in enumerate(values):
            data[i][i] = to_rational(value)
        return cls._raw(data, n, n)

    @classmethod
    def from_columns(
        cls, columns: Sequence[Sequence[RationalLike]], rows: int = 0
    ) -> "ExactMatrix":
        if not columns:
            return cls._raw([[] for _ in range(rows)], rows, 0)
        height = len(columns[0])
        if any(len(col) != height for col in columns):
            raise DimensionMismatchError("Columns have unequal lengths")
        data = [
            [to_rational(col[i]) for col in columns] for i in range(height)
        ]
        return cls._raw(data, height, len(columns))

    @classmethod
    def from_flat(
        cls, values: Sequence[Rational], rows: int, cols: int
    ) -> "ExactMatrix":
        if len(values) != rows * cols:
            raise DimensionMismatchError(
                f"{len(values)} entries cannot fill a {rows}x{cols} matrix"
            )
        data = [values[r * cols : (r + 1) * cols] for r in range(rows)]
        return cls._raw(data, rows, cols)

    # access -----------------------------------------------------------

    @property
    def shape(self) -> Tuple[int, int]:
        return (self.rows, self.cols)

    def __getitem__(self, key: Tuple[int, int]) -> Rational:
        i, j = key
        return self._data[i][j]

    def row(self, i: int) -> Vector:
        return self._data[i]

    def column(self, j: int) -> Vector:
        return tuple(row[j] for row in self._data)

    def columns(self) -> List[Vector]:
        return [self.column(j) for j in range(self.cols)]

    def to_rows(self) -> List[List[Rational]]:
        return [list(row) for row in self._data]

    def flatten(self) -> Vector:
        return tuple(value for row in self._data for value in row)

    def is_zero(self) -> bool:
        return not any(value for row in self._data for value in row)

    def is_square(self) -> bool:
        return self.rows == self.cols

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, ExactMatrix):
            return NotImplemented
        return self.shape == other.shape and self._data == other._data

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.shape, self._data))
        return self._hash

    def __repr__(self) -> str:
        body = "; ".join(
            ",".join(format_rational(v) for v in row) for row in self._data
        )
        return f"ExactMatrix({self.rows}x{self.cols}: {body})"

    # arithmetic -------------------------------------------------------

    def _check_same_shape(self, other: "ExactMatrix") -> None:
        if self.shape != other.shape:
            raise DimensionMismatchError(
                f"Shapes {self.shape} and {other.shape} differ"
            )

    def __add__(self, other: "ExactMatrix") -> "ExactMatrix":
        self._check_same_shape(other)
        data = [
            [a + b for a, b in zip(r1, r2)]
            for r1, r2 in zip(self._data, other._data)
        ]
        return ExactMatrix._raw(data, self.rows, self.cols)

    def __sub__(self, other: "ExactMatrix") -> "ExactMatrix":
        self._check_same_shape(other)
        data = [
            [a - b for a, b in zip(r1, r2)]
            for r1, r2 in zip(self._data, other._data)
        ]
        return ExactMatrix._raw(data, self.rows, self.cols)

    def __neg__(self) -> "ExactMatrix":
        data = [[-a for a in row] for row in self._data]
        return ExactMatrix._raw(data, self.rows, self.cols)

    def scale(self, factor: RationalLike) -> "ExactMatrix":
        c = to_rational(factor)
        if not c:
            return ExactMatrix.zeros(self.rows, self.cols)
        data = [[c * a for a in row] for row in self._data]
        return ExactMatrix._raw(data, self.rows, self.cols)

    def __matmul__(self, other: "ExactMatrix") -> "ExactMatrix":
        if self.cols != other.rows:
            raise DimensionMismatchError(
                f"Cannot multiply {self.shape} by {other.shape}"
            )
        right = [
            [(j, b) for j, b in enumerate(row) if b] for row in other._data
        ]
        data = []
        for row in self._data:
            acc = [ZERO] * other.cols
            for k, a in enumerate(row):
                if not a:
                    continue
                for j, b in right[k]:
                    acc[j] += a * b
            data.append(acc)
        return ExactMatrix._raw(data, self.rows, other.cols)

    def apply(self, vector: Sequence[Rational]) -> Vector:
        if len(vector) != self.cols:
            raise DimensionMismatchError(
                f"Vector of length {len(vector)} for {self.shape} matrix"
            )
        support = [(j, v) for j, v in enumerate(vector) if v]
        return tuple(
            sum((row[j] * v for j, v in support), ZERO) for row in self._data
        )

    def transpose(self) -> "ExactMatrix":
        data = [list(col) for col in zip(*self._data)] if self.rows else []
        return ExactMatrix._raw(data, self.cols, self.rows)

    def trace(self) -> Rational:
        if not self.is_square():
            raise DimensionMismatchError("Trace of a non-square matrix")
        return sum((self._data[i][i] for i in range(self.rows)), ZERO)

    def commutator(self, other: "ExactMatrix") -> "ExactMatrix":
        return self @ other - other @ self

    def submatrix(
        self, rows: Sequence[int], cols: Sequence[int]
    ) -> "ExactMatrix":
        data = [[self._data[i][j] for j in cols] for i in rows]
        return ExactMatrix._raw(data, len(rows), len(cols))

    def permute(self, order: Sequence[int]) -> "ExactMatrix":
        """Conjugate by the permutation sending basis ``order[k]`` to ``k``."""

        return self.submatrix(order, order)

    # elimination ------------------------------------------------------

    def rref(self) -> Tuple["ExactMatrix", List[int]]:
        """Reduced row echelon form and the pivot columns."""

        data = self.to_rows()
        pivots: List[int] = []
        r = 0
        for c in range(self.cols):
            pivot_row = next(
                (i for i in range(r, self.rows) if data[i][c]), None
            )
            if pivot_row is None:
                continue
            data[r], data[pivot_row] = data[pivot_row], data[r]
            inv = ONE / data[r][c]
            data[r] = [inv * v for v in data[r]]
            for i in range(self.rows):
                factor = data[i][c]
                if i != r and factor:
                    data[i] = [
                        a - factor * b for a, b in zip(data[i], data[r])
                    ]
            pivots.append(c)
            r += 1
            if r == self.rows:
                break
        return ExactMatrix._raw(data, self.rows, self.cols), pivots

    def nullspace(self) -> List[Vector]:
        reduced, pivots = self.rref()
        free = [c for c in range(self.cols) if c not in set(pivots)]
        basis: List[Vector] = []
        for f in free:
            vec = [ZERO] * self.cols
            vec[f] = ONE
            for r, p in enumerate(pivots):
                vec[p] = -reduced[r, f]
            basis.append(tuple(vec))
        return basis

    def inverse(self) -> "ExactMatrix":
        if not self.is_square():
            raise DimensionMismatchError("Inverse of a non-square matrix")
        n = self.rows
        augmented = ExactMatrix._raw(
            [
                list(row) + [ONE if i == j else ZERO for j in range(n)]
                for i, row in enumerate(self._data)
            ],
            n,
            2 * n,
        )
        reduced, pivots = augmented.rref()
        if pivots[:n] != list(range(n)):
            raise SingularParameterError("Matrix is singular")
        return reduced.submatrix(range(n), range(n, 2 * n))

    def left_inverse(self) -> "ExactMatrix":
        """Return L with ``L @ self == identity`` for full column rank."""

        _, pivot_rows = self.transpose().rref()
        if len(pivot_rows) != self.cols:
            raise DimensionMismatchError(
                "Columns are linearly dependent; no left inverse"
            )
        square_inv = self.submatrix(pivot_rows, range(self.cols)).inverse()
        data = [[ZERO] * self.rows for _ in range(self.cols)]
        for k, i in enumerate(pivot_rows):
            for r in range(self.cols):
                data[r][i] = square_inv[r, k]
        return ExactMatrix._raw(data, self.cols, self.rows)

    def integer_rows(self) -> Tuple[List[List[int]], List[int]]:
        """Rows scaled by their denominator lcm, plus the scale factors."""

        scaled: List[List[int]] = []
        factors: List[int] = []
        for row in self._data:
            factor = lcm_of_denominators(row)
            scaled.append([int((v * factor).numerator) for v in row])
            factors.append(factor)
        return scaled, factors

    def det(self) -> Rational:
        if not self.is_square():
            raise DimensionMismatchError("Determinant of a non-square matrix")
        a, factors = self.integer_rows()
        n = self.rows
        sign = 1
        prev = 1
        for k in range(n):
            pivot = next((i for i in range(k, n) if a[i][k]), None)
            if pivot is None:
                return ZERO
            if pivot != k:
                a[k], a[pivot] = a[pivot], a[k]
                sign = -sign
            for i in range(k + 1, n):
                for j in range(k + 1, n):
                    a[i][j] = (a[k][k] * a[i][j] - a[i][k] * a[k][j]) // prev
                a[i][k] = 0
            prev = a[k][k]
        denominator = 1
        for factor in factors:
            denominator *= factor
        last = int(a[n - 1][n - 1]) if n else 1
        return QQ(sign * last, denominator)

    def to_json(self) -> List[List[str]]:
        return [[format_rational(v) for v in row] for row in self._data]


def rank(m: ExactMatrix) -> int:
    """Exact rank via fraction-free Bareiss elimination over the integers."""

    a, _ = m.integer_rows()
    rows, cols = m.rows, m.cols
    r = 0
    prev = 1
    for c in range(cols):
        if r == rows:
            break
        pivot = next((i for i in range(r, rows) if a[i][c]), None)
        if pivot is None:
            continue
        a[r], a[pivot] = a[pivot], a[r]
        pr = a[r]
        for i in range(r + 1, rows):
            ai = a[i]
            lead = ai[c]
            for j in range(c + 1, cols):
                ai[j] = (pr[c] * ai[j] - lead * pr[j]) // prev
            ai[c] = 0
        prev = pr[c]
        r += 1
    return r


def stack_columns(vectors: Iterable[Sequence[Rational]]) -> ExactMatrix:
    return ExactMatrix.from_columns([tuple(v) for v in vectors])


__all__ = ["ExactMatrix", "Vector", "rank", "stack_columns"]
