#!/usr/bin/env python3
"""Smallest orders by exhaustive search.

Walk up the orders for a few small (r, z, g) and report the first one that
admits a graph. Every empty order is a finished exhaustive search, so the
first hit is the exact minimum.
"""

from __future__ import annotations

import time

from mixedcages import SearchConfig, search

CASES = [
    # r, z, g, engine
    (1, 1, 5, "directed-first"),
    (1, 1, 6, "directed-first"),
    (2, 1, 5, "directed-first"),
    (2, 1, 6, "directed-first"),
    (1, 2, 5, "undirected-first"),
    (1, 2, 6, "undirected-first"),
]

for r, z, g, mode in CASES:
    n = g
    t = time.perf_counter()
    while True:
        res = search(SearchConfig(r, z, g, n, mode=mode))
        assert res.exhaustive
        if res.graphs:
            break
        n += 1
    print(f"({r},{z},{g}): smallest order {n}, {len(res.graphs)} graph(s) there, "
          f"{time.perf_counter() - t:.1f}s")
