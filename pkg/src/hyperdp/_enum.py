"""Chunked enumeration of the coloring space ``[k]^n``.

Colorings are indexed by a mixed-radix counter with vertex 0 as the fastest
digit, so ``color(v) = (index // k**v) % k``.  Colors are 0-based here.
Counting is split into disjoint index ranges; each range yields an exact
integer and the ranges are summed in order, so the result does not depend
on how the work is partitioned or how many workers run it.
"""

from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from functools import lru_cache
from typing import Callable, Optional

import numpy as np

from .errors import ResourceLimit

DEFAULT_BUDGET = 10**9
CHUNK_ROWS = 1 << 17
_MAX_INDEX = 1 << 62


def resolve_budget(budget: Optional[int]) -> int:
    return DEFAULT_BUDGET if budget is None else int(budget)


def check_budget(required: int, budget: Optional[int], what: str = "enumeration") -> None:
    limit = resolve_budget(budget)
    if required > limit:
        raise ResourceLimit(required, limit, what)


def coloring_block(n: int, k: int, lo: int, hi: int) -> np.ndarray:
    """Colorings with indices in ``[lo, hi)`` as an ``(hi - lo, n)`` array."""
    if hi - lo == k**n and lo == 0 and k**n <= CHUNK_ROWS:
        return _full_block(n, k)
    idx = np.arange(lo, hi, dtype=np.int64)
    out = np.empty((hi - lo, n), dtype=np.intp)
    for v in range(n):
        out[:, v] = idx % k
        idx //= k
    return out


@lru_cache(maxsize=256)
def _full_block(n: int, k: int) -> np.ndarray:
    idx = np.arange(k**n, dtype=np.int64)
    out = np.empty((k**n, n), dtype=np.intp)
    for v in range(n):
        out[:, v] = idx % k
        idx //= k
    out.setflags(write=False)
    return out


def ranges(total: int, chunk: int = CHUNK_ROWS):
    return [(lo, min(lo + chunk, total)) for lo in range(0, total, chunk)]


def count_good(
    n: int,
    k: int,
    bad_mask: Callable[[np.ndarray], np.ndarray],
    checks_per_row: int,
    budget: Optional[int] = None,
    workers: int = 1,
    what: str = "coloring count",
) -> int:
    """Number of colorings ``f`` in ``[k]^n`` with ``bad_mask`` false.

    ``bad_mask`` maps an ``(rows, n)`` block of colorings to a boolean row mask.
    """
    if k <= 0:
        return 0
    total = k**n
    check_budget(total * max(checks_per_row, 1), budget, what)
    if total >= _MAX_INDEX:
        raise ResourceLimit(total, _MAX_INDEX, what)

    def work(span):
        block = coloring_block(n, k, *span)
        return int(block.shape[0] - np.count_nonzero(bad_mask(block)))

    spans = ranges(total)
    if workers > 1 and len(spans) > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            return sum(pool.map(work, spans))
    return sum(work(s) for s in spans)
