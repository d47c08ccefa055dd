"""Worker-count control for embarrassingly parallel per-node loops.

The ROLE_FORGE_THREADS environment variable caps the worker count.  Work is
split into contiguous chunks whose boundaries depend only on the input
length, and chunk results are concatenated in submission order, so outputs
are identical for any worker count.
"""

from __future__ import annotations

import os
from concurrent.futures import ThreadPoolExecutor

ENV_VAR = "ROLE_FORGE_THREADS"


def worker_count() -> int:
    raw = os.environ.get(ENV_VAR)
    if raw:
        try:
            value = int(raw)
        except ValueError:
            raise ValueError(f"{ENV_VAR} must be a positive integer, got {raw!r}") from None
        if value < 1:
            raise ValueError(f"{ENV_VAR} must be a positive integer, got {raw!r}")
        return value
    return min(4, os.cpu_count() or 1)


def map_chunks(fn, items, *, min_chunk: int = 256) -> list:
    """Apply fn to contiguous chunks of items and concatenate the results."""
    n = len(items)
    workers = worker_count()
    if workers <= 1 or n < 2 * min_chunk:
        return list(fn(items))
    chunk = max(min_chunk, -(-n // workers))
    parts = [items[i:i + chunk] for i in range(0, n, chunk)]
    out: list = []
    with ThreadPoolExecutor(max_workers=workers) as pool:
        for part in pool.map(fn, parts):
            out.extend(part)
    return out
