"""Order-preserving parallel map over a thread pool."""

from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from typing import Callable, Iterable, List, Optional, TypeVar

T = TypeVar("T")
R = TypeVar("R")


def ordered_map(
    func: Callable[[T], R],
    items: Iterable[T],
    workers: Optional[int] = None,
) -> List[R]:
    """Apply ``func`` to every item and return results in input order.

    ``workers`` of 1 runs serially; 0 or None uses the executor default.
    Exceptions from ``func`` propagate to the caller.
    """

    values = list(items)
    if workers == 1 or len(values) <= 1:
        return [func(value) for value in values]
    with ThreadPoolExecutor(max_workers=workers or None) as executor:
        futures = [executor.submit(func, value) for value in values]
        return [future.result() for future in futures]


__all__ = ["ordered_map"]
