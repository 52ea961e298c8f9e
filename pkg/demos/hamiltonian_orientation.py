#!/usr/bin/env python3
"""A (5,1,5)-graph from the Hoffman-Singleton graph.

Orient one Hamiltonian cycle: each vertex keeps five edges and gains one
out-arc and one in-arc, and the girth stays 5.
"""

from __future__ import annotations

import time

from mixedcages import verify
from mixedcages.constructions import hoffman_singleton, orient_cycle
from mixedcages.hamiltonian import find_hamiltonian_cycle

H = hoffman_singleton()
print("Hoffman-Singleton:", verify(H).r, "regular, girth", verify(H).girth)

t = time.perf_counter()
cycle = find_hamiltonian_cycle(H)
print(f"Hamiltonian cycle found in {time.perf_counter() - t:.2f}s")

G = orient_cycle(H, cycle)
v = verify(G)
print(f"oriented: order {v.order}, r={v.r} z={v.z} girth={v.girth}")
