"""Order-preserving parallel map for sweeps over graph catalogs.

Input is cut into fixed-size chunks; workers process chunks independently and
results are yielded in input order, so output never depends on the worker
count.  Interrupting the consumer terminates the pool between chunks.
"""

from __future__ import annotations

import multiprocessing as mp
from collections.abc import Callable, Iterable, Iterator
from itertools import islice
from typing import TypeVar

T = TypeVar("T")
R = TypeVar("R")

DEFAULT_CHUNK = 512


def chunked(items: Iterable[T], size: int) -> Iterator[list[T]]:
    it = iter(items)
    while True:
        block = list(islice(it, size))
        if not block:
            return
        yield block


def _run_chunk(args):
    func, block = args
    return [func(x) for x in block]


def ordered_map(
    func: Callable[[T], R],
    items: Iterable[T],
    jobs: int = 1,
    chunk: int = DEFAULT_CHUNK,
) -> Iterator[R]:
    """``map(func, items)`` spread over ``jobs`` processes, results in input order.

    ``func`` must be a picklable top-level function when ``jobs > 1``.
    """
    if jobs < 1:
        raise ValueError("jobs must be at least 1")
    if chunk < 1:
        raise ValueError("chunk must be at least 1")
    if jobs == 1:
        for x in items:
            yield func(x)
        return
    pool = mp.get_context("spawn").Pool(jobs)
    try:
        tasks = ((func, block) for block in chunked(items, chunk))
        for results in pool.imap(_run_chunk, tasks):
            yield from results
        pool.close()
    finally:
        pool.terminate()
        pool.join()
