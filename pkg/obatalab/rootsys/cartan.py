"""Cartan matrices and root lengths in Bourbaki numbering."""

from __future__ import annotations

from typing import List, Tuple

from obatalab.exceptions import InvalidRootSystemError

TYPE_LETTERS = ("A", "B", "C", "D", "E", "F", "G")

CartanRows = Tuple[Tuple[int, ...], ...]


def validate_type(type_letter: str, rank: int) -> str:
    """Normalize the type letter and reject pairs outside the list."""

    letter = str(type_letter).strip().upper()
    minimum = {"A": 1, "B": 2, "C": 2, "D": 4}
    if letter in minimum:
        if rank < minimum[letter]:
            raise InvalidRootSystemError(
                f"Type {letter} requires rank >= {minimum[letter]}, "
                f"got {rank}"
            )
        return letter
    allowed = {"E": (6, 7, 8), "F": (4,), "G": (2,)}
    if letter not in allowed:
        raise InvalidRootSystemError(f"Unknown type letter '{type_letter}'")
    if rank not in allowed[letter]:
        raise InvalidRootSystemError(
            f"Type {letter} exists only in ranks {allowed[letter]}"
        )
    return letter


def _edges(letter: str, rank: int) -> List[Tuple[int, int]]:
    if letter == "E":
        chain = [(0, 2), (2, 3), (3, 4)] + [
            (k, k + 1) for k in range(4, rank - 1)
        ]
        return chain + [(1, 3)]
    if letter == "D":
        return [(k, k + 1) for k in range(rank - 2)] + [(rank - 3, rank - 1)]
    return [(k, k + 1) for k in range(rank - 1)]


def squared_lengths(type_letter: str, rank: int) -> Tuple[int, ...]:
    """(alpha_i, alpha_i) for each simple root; short roots have length 2."""

    letter = validate_type(type_letter, rank)
    if letter == "B":
        return tuple([4] * (rank - 1) + [2])
    if letter == "C":
        return tuple([2] * (rank - 1) + [4])
    if letter == "F":
        return (4, 4, 2, 2)
    if letter == "G":
        return (2, 6)
    return tuple([2] * rank)


def symmetrized_cartan(type_letter: str, rank: int) -> CartanRows:
    """Gram matrix (alpha_i, alpha_j) of the simple roots."""

    letter = validate_type(type_letter, rank)
    lengths = squared_lengths(letter, rank)
    gram = [[0] * rank for _ in range(rank)]
    for i in range(rank):
        gram[i][i] = lengths[i]
    for i, j in _edges(letter, rank):
        # joined nodes: the shorter root has length 2
        product = -max(lengths[i], lengths[j]) // 2
        gram[i][j] = gram[j][i] = product
    return tuple(tuple(row) for row in gram)


def cartan_matrix(type_letter: str, rank: int) -> CartanRows:
    """A[i][j] = 2 (alpha_i, alpha_j) / (alpha_i, alpha_i)."""

    gram = symmetrized_cartan(type_letter, rank)
    return tuple(
        tuple(2 * gram[i][j] // gram[i][i] for j in range(rank))
        for i in range(rank)
    )


__all__ = [
    "TYPE_LETTERS",
    "CartanRows",
    "cartan_matrix",
    "squared_lengths",
    "symmetrized_cartan",
    "validate_type",
]
