from __future__ import annotations

import os
from concurrent.futures import ThreadPoolExecutor


def resolve_threads(threads: int | None) -> int:
    if threads is None:
        threads = int(os.environ.get("EC_CENSUS_THREADS", "1") or 1)
    return max(1, int(threads))


def split_range(lo: int, hi: int, parts: int) -> list[tuple[int, int]]:
    """Cut ``[lo, hi)`` into at most ``parts`` contiguous half-open pieces."""
    if hi <= lo:
        return []
    parts = max(1, min(parts, hi - lo))
    step, extra = divmod(hi - lo, parts)
    out = []
    start = lo
    for i in range(parts):
        end = start + step + (1 if i < extra else 0)
        out.append((start, end))
        start = end
    return out


def map_strata(fn, strata, threads: int) -> list:
    """Run ``fn(lo, hi)`` on each stratum and concatenate results in stratum order."""
    if threads <= 1 or len(strata) <= 1:
        chunks = [fn(lo, hi) for lo, hi in strata]
    else:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            chunks = list(pool.map(lambda s: fn(*s), strata))
    return [item for chunk in chunks for item in chunk]
