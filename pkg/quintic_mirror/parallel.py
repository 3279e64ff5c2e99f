from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from typing import Callable, Iterable, TypeVar

from quintic_mirror.config import settings

T = TypeVar("T")
R = TypeVar("R")


def parallel_map(func: Callable[[T], R], items: Iterable[T], threads: int | None = None) -> list[R]:
    """Ordered map over ``items``, fanned out to at most QUINTIC_THREADS workers.

    Results come back in input order, so output is identical to a serial map.
    """
    items = list(items)
    workers = min(threads or settings.threads, len(items))
    if workers <= 1:
        return [func(item) for item in items]
    with ThreadPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(func, items))
