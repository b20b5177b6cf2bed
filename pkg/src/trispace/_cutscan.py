"""Vectorised exhaustive scan over the bipartitions of a small vertex set."""

from __future__ import annotations

import numpy as np

MAX_VERTICES = 24
_CHUNK = 1 << 16


def scan_cuts(n: int, edges, flags) -> tuple[int, int]:
    """Minimise ``sum_e flag_e XOR [e crosses W]`` over sides ``W`` with vertex 0 outside.

    Returns ``(minimum, side mask)``; ties resolve to the smallest mask.
    """
    if n > MAX_VERTICES:
        raise ValueError(f"exhaustive cut scan limited to n <= {MAX_VERTICES}, got n={n}")
    if not len(edges):
        return 0, 0
    eu = np.asarray([u for u, _ in edges], dtype=np.int64)
    ev = np.asarray([v for _, v in edges], dtype=np.int64)
    fl = np.asarray(flags, dtype=np.uint8)
    total = 1 << max(n - 1, 0)
    best, best_side = None, 0
    for start in range(0, total, _CHUNK):
        ks = np.arange(start, min(total, start + _CHUNK), dtype=np.uint32)
        sides = ks << np.uint32(1)
        bits = ((sides[None, :] >> np.arange(n, dtype=np.uint32)[:, None]) & 1).astype(np.uint8)
        acc = np.zeros(ks.size, dtype=np.int32)
        for u, v, f in zip(eu, ev, fl):
            acc += bits[u] ^ bits[v] ^ f
        i = int(np.argmin(acc))
        if best is None or acc[i] < best:
            best, best_side = int(acc[i]), int(sides[i])
    return best, best_side
