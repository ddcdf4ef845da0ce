"""Optional thread parallelism capped by the MIRRORLAT_THREADS environment variable."""

from __future__ import annotations

import os
from concurrent.futures import ThreadPoolExecutor


def workers() -> int:
    """Worker count from MIRRORLAT_THREADS (default 1, i.e. serial)."""
    raw = os.environ.get("MIRRORLAT_THREADS", "1")
    try:
        return max(1, int(raw))
    except ValueError:
        return 1


def pmap(fn, items) -> list:
    """Ordered map; results are joined in input order regardless of scheduling."""
    items = list(items)
    n = min(workers(), len(items))
    if n <= 1:
        return [fn(x) for x in items]
    with ThreadPoolExecutor(max_workers=n) as pool:
        return list(pool.map(fn, items))
