"""Mixed graphs: vertices 0..n-1, undirected edges and directed arcs.

An edge ``{u, v}`` is stored as the sorted pair ``(u, v)`` with ``u < v``; an
arc ``u -> v`` as the ordered pair ``(u, v)``. An edge and an arc on the same
pair of vertices may coexist; together they form a cycle of length 2.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from typing import Iterable, NamedTuple, Optional

EDGE = "e"
ARC = "a"

# An element is (kind, u, v); for edges u < v.
Element = tuple


class GraphError(ValueError):
    """Raised when a mixed graph would violate its structural invariants."""


class Degrees(NamedTuple):
    deg: int
    odeg: int
    ideg: int


def edge(u: int, v: int) -> Element:
    return (EDGE, min(u, v), max(u, v))


def arc(u: int, v: int) -> Element:
    return (ARC, u, v)


@dataclass(frozen=True)
class MixedGraph:
    n: int
    edges: frozenset = frozenset()
    arcs: frozenset = frozenset()
    # neighbour lists, sorted, derived in __post_init__
    nbrs: tuple = field(init=False, repr=False, compare=False)
    out: tuple = field(init=False, repr=False, compare=False)
    inn: tuple = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        n = self.n
        if n < 0:
            raise GraphError(f"negative vertex count {n}")
        nbrs = [[] for _ in range(n)]
        out = [[] for _ in range(n)]
        inn = [[] for _ in range(n)]
        for u, v in self.edges:
            if not (0 <= u < n and 0 <= v < n):
                raise GraphError(f"edge ({u}, {v}) out of range for n={n}")
            if u == v:
                raise GraphError(f"self-loop edge at {u}")
            if u > v:
                raise GraphError(f"edge ({u}, {v}) not normalized")
            nbrs[u].append(v)
            nbrs[v].append(u)
        for u, v in self.arcs:
            if not (0 <= u < n and 0 <= v < n):
                raise GraphError(f"arc ({u}, {v}) out of range for n={n}")
            if u == v:
                raise GraphError(f"self-loop arc at {u}")
            out[u].append(v)
            inn[v].append(u)
        object.__setattr__(self, "nbrs", tuple(tuple(sorted(x)) for x in nbrs))
        object.__setattr__(self, "out", tuple(tuple(sorted(x)) for x in out))
        object.__setattr__(self, "inn", tuple(tuple(sorted(x)) for x in inn))

    @classmethod
    def build(cls, n: int, edges: Iterable = (), arcs: Iterable = ()) -> "MixedGraph":
        """Build from possibly unnormalized edge pairs; duplicates are an error."""
        es = set()
        for u, v in edges:
            e = (min(u, v), max(u, v))
            if e in es:
                raise GraphError(f"duplicate edge {e}")
            es.add(e)
        as_ = set()
        for u, v in arcs:
            if (u, v) in as_:
                raise GraphError(f"duplicate arc {(u, v)}")
            as_.add((u, v))
        return cls(n, frozenset(es), frozenset(as_))

    def elements(self) -> list:
        """All elements in a fixed order: sorted edges then sorted arcs."""
        return [(EDGE, u, v) for u, v in sorted(self.edges)] + [
            (ARC, u, v) for u, v in sorted(self.arcs)
        ]

    def has(self, e: Element) -> bool:
        kind, u, v = e
        if kind == EDGE:
            return (min(u, v), max(u, v)) in self.edges
        return (u, v) in self.arcs

    def relabel(self, perm) -> "MixedGraph":
        """Image of the graph under ``v -> perm[v]``."""
        es = frozenset((min(perm[u], perm[v]), max(perm[u], perm[v])) for u, v in self.edges)
        as_ = frozenset((perm[u], perm[v]) for u, v in self.arcs)
        return MixedGraph(self.n, es, as_)

    def undirected_part(self) -> "MixedGraph":
        return MixedGraph(self.n, self.edges, frozenset())

    def directed_part(self) -> "MixedGraph":
        return MixedGraph(self.n, frozenset(), self.arcs)

    def with_elements(self, add=(), remove=()) -> "MixedGraph":
        es, as_ = set(self.edges), set(self.arcs)
        for kind, u, v in remove:
            (es if kind == EDGE else as_).discard((min(u, v), max(u, v)) if kind == EDGE else (u, v))
        for kind, u, v in add:
            if kind == EDGE:
                es.add((min(u, v), max(u, v)))
            else:
                as_.add((u, v))
        return MixedGraph(self.n, frozenset(es), frozenset(as_))


def degree_profile(G: MixedGraph) -> list[Degrees]:
    return [Degrees(len(G.nbrs[v]), len(G.out[v]), len(G.inn[v])) for v in range(G.n)]


def check_regular(G: MixedGraph, r: int, z: int) -> bool:
    return all(d.deg == r and d.odeg == z for d in degree_profile(G))


def check_totally_regular(G: MixedGraph) -> bool:
    """Constant degree, out-degree and in-degree."""
    return len(set(degree_profile(G))) <= 1


def regularity(G: MixedGraph) -> Optional[tuple[int, int]]:
    """``(r, z)`` if ``G`` is regular, else None."""
    prof = set((d.deg, d.odeg) for d in degree_profile(G))
    if len(prof) == 1:
        return prof.pop()
    if not prof:
        return (0, 0)
    return None


def mixed_distance(
    G: MixedGraph,
    s: int,
    t: int,
    forbidden: Optional[Element] = None,
    limit: Optional[int] = None,
) -> Optional[int]:
    """Length of a shortest walk from ``s`` to ``t`` following edges either way
    and arcs forwards, never using ``forbidden``. None if unreachable (or if
    longer than ``limit`` when one is given)."""
    if s == t:
        return 0
    fk, fu, fv = forbidden if forbidden is not None else (None, -1, -1)
    if fk == EDGE:
        fu, fv = min(fu, fv), max(fu, fv)
    dist = {s: 0}
    queue = deque([s])
    while queue:
        x = queue.popleft()
        d = dist[x] + 1
        if limit is not None and d > limit:
            return None
        for kind, nb in ((EDGE, G.nbrs[x]), (ARC, G.out[x])):
            for y in nb:
                if y in dist:
                    continue
                if fk == kind and (
                    (kind == EDGE and {x, y} == {fu, fv}) or (kind == ARC and (x, y) == (fu, fv))
                ):
                    continue
                if y == t:
                    return d
                dist[y] = d
                queue.append(y)
    return None


def girth_through_element(G: MixedGraph, e: Element, limit: Optional[int] = None) -> Optional[int]:
    """Shortest cycle using ``e``, or None. With ``limit``, cycles longer than
    ``limit`` are not reported."""
    kind, u, v = e
    if not G.has(e):
        raise GraphError(f"{e} is not an element of the graph")
    lim = None if limit is None else limit - 1
    orients = [(u, v)] if kind == ARC else [(u, v), (v, u)]
    best = None
    for a, b in orients:
        d = mixed_distance(G, b, a, forbidden=e, limit=lim)
        if d is not None and (best is None or d + 1 < best):
            best = d + 1
            if lim is not None:
                lim = d
    return best


def girth(G: MixedGraph) -> Optional[int]:
    """Length of a shortest cycle (no repeated edge or arc); None if acyclic."""
    best = None
    for e in G.elements():
        c = girth_through_element(G, e, limit=None if best is None else best - 1)
        if c is not None and (best is None or c < best):
            best = c
            if best == 2:
                break
    return best


def brute_force_girth(G: MixedGraph, cap: int) -> Optional[int]:
    """Exhaustive search for closed walks of length <= cap with distinct elements.

    Independent of the BFS routine; only meant for small test graphs.
    """
    steps = [[] for _ in range(G.n)]
    for u, v in G.edges:
        steps[u].append((v, (EDGE, u, v)))
        steps[v].append((u, (EDGE, u, v)))
    for u, v in G.arcs:
        steps[u].append((v, (ARC, u, v)))

    best = None

    def walk(start, x, used, length):
        nonlocal best
        for y, el in steps[x]:
            if el in used:
                continue
            if y == start:
                if best is None or length + 1 < best:
                    best = length + 1
                continue
            if length + 1 < (cap if best is None else best - 1):
                used.add(el)
                walk(start, y, used, length + 1)
                used.remove(el)

    for s in range(G.n):
        walk(s, s, set(), 0)
    if best is not None and best <= cap:
        return best
    return None


def arc_cycle_lengths(G: MixedGraph) -> Optional[list[int]]:
    """Cycle type of the arc set when it is a permutation (out = in = 1), else None."""
    if any(len(G.out[v]) != 1 or len(G.inn[v]) != 1 for v in range(G.n)):
        return None
    seen = [False] * G.n
    lengths = []
    for s in range(G.n):
        if seen[s]:
            continue
        k, x = 0, s
        while not seen[x]:
            seen[x] = True
            x = G.out[x][0]
            k += 1
        lengths.append(k)
    return sorted(lengths, reverse=True)


def components(G: MixedGraph, undirected_only: bool = False) -> list[list[int]]:
    """Connected components of the underlying graph (arcs taken both ways)."""
    adj = [set(G.nbrs[v]) for v in range(G.n)]
    if not undirected_only:
        for u, v in G.arcs:
            adj[u].add(v)
            adj[v].add(u)
    seen = [False] * G.n
    comps = []
    for s in range(G.n):
        if seen[s]:
            continue
        comp, stack = [], [s]
        seen[s] = True
        while stack:
            x = stack.pop()
            comp.append(x)
            for y in adj[x]:
                if not seen[y]:
                    seen[y] = True
                    stack.append(y)
        comps.append(sorted(comp))
    return comps


@dataclass(frozen=True)
class Verification:
    order: int
    r: Optional[int]
    z: Optional[int]
    totally_regular: bool
    girth: Optional[int]

    def matches(self, r: int, z: int, g: int, n: int) -> bool:
        return (self.r, self.z, self.girth, self.order) == (r, z, g, n)


def verify(G: MixedGraph) -> Verification:
    rz = regularity(G)
    r, z = rz if rz is not None else (None, None)
    return Verification(G.n, r, z, check_totally_regular(G), girth(G))
