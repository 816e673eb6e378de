"""Order-preserving process fan-out capped by ``LABELCUT_THREADS``."""

import os
from concurrent.futures import ProcessPoolExecutor


def worker_count() -> int:
    """``LABELCUT_THREADS`` (0 or unset = one per CPU)."""
    raw = os.environ.get("LABELCUT_THREADS", "0").strip() or "0"
    n = int(raw)
    if n < 0:
        raise ValueError("LABELCUT_THREADS must be >= 0")
    return n or os.cpu_count() or 1


def pmap(fn, items, chunksize=8) -> list:
    """``[fn(x) for x in items]``, possibly across processes; order is kept."""
    items = list(items)
    workers = min(worker_count(), len(items))
    if workers <= 1:
        return [fn(x) for x in items]
    with ProcessPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(fn, items, chunksize=chunksize))
