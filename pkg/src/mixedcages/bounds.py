"""Order bounds for (r, z, g)-mixed graphs. All arithmetic is in integers."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional


def moore_bound(r: int, d: int) -> int:
    """Vertices in a depth-``d`` tree where the root has ``r`` children and
    every other internal vertex has ``r - 1``."""
    if r <= 0:
        raise ValueError("degree must be positive")
    if d < 0:
        raise ValueError("depth must be non-negative")
    if d == 0:
        return 1
    if r == 1:
        return 2
    if r == 2:
        return 2 * d + 1
    return (r * (r - 1) ** d - 2) // (r - 2)


def ahm_bound(r: int, g: int) -> int:
    """Lower bound on the order of an (r, 1, g)-graph: Moore trees hung on a
    directed path of g vertices, the i-th tree of depth min(i, g - 1 - i)."""
    if g < 3:
        raise ValueError("girth must be at least 3")
    return sum(moore_bound(r, min(i, g - 1 - i)) for i in range(g))


def bcw_order(r: int, g: int) -> int:
    """Order of the circulant digraph with steps 1..r and girth g."""
    if r < 1 or g < 2:
        raise ValueError("need r >= 1 and g >= 2")
    return r * (g - 1) + 1


def _even_if_odd_degree(n: int, r: int) -> int:
    # an odd-degree graph has an even number of vertices
    return n + 1 if r % 2 == 1 and n % 2 == 1 else n


def lower_bound(r: int, z: int, g: int) -> int:
    """Best documented lower bound for f(r, z, g).

    z = 1 uses the Moore-tree path bound; z = 2 uses the proven
    directed-girth bound 2g - 1. For z > 2 the conjectured directed order
    z(g - 1) + 1 is used; that case is a heuristic, not a theorem.
    Odd r forces even order in every case.
    """
    if r < 1 or z < 1 or g < 3:
        raise ValueError("need r, z >= 1 and g >= 3")
    if z == 1:
        base = ahm_bound(r, g)
    elif z == 2:
        base = 2 * g - 1
    else:
        base = bcw_order(z, g)
    return _even_if_odd_degree(base, r)


def f21(g: int) -> int:
    """Exact order of a (2, 1, g)-cage."""
    if g < 3:
        raise ValueError("girth must be at least 3")
    return (g * g + 1) // 2 if g % 2 else g * g // 2


# (r, z, g) -> (lower, exact, upper) as tabulated for small cases.
TABLE = {
    (2, 2, 5): (None, 19, None),
    (2, 2, 6): (None, 27, None),
    (3, 1, 5): (None, 24, None),
    (3, 1, 6): (None, 30, None),
    (3, 1, 7): (52, None, 60),
    (3, 1, 8): (74, None, 76),
    (4, 1, 5): (29, None, 34),
    (4, 1, 6): (46, None, 48),
    (5, 1, 5): (40, None, 50),
    (5, 1, 6): (66, None, 72),
}


@dataclass(frozen=True)
class BoundReport:
    r: int
    z: int
    g: int
    ahm_lower: Optional[int]
    parity_lower: int
    bcw_digraph_order: int
    table_entry: Optional[tuple] = None


def bound_report(r: int, z: int, g: int) -> BoundReport:
    return BoundReport(
        r=r,
        z=z,
        g=g,
        ahm_lower=ahm_bound(r, g) if z == 1 else None,
        parity_lower=lower_bound(r, z, g),
        bcw_digraph_order=bcw_order(z, g),
        table_entry=TABLE.get((r, z, g)),
    )
