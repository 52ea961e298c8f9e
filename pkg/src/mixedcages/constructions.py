"""Explicit (r, z, g)-graph families and individual graphs.

Most of the sporadic graphs are cyclic lifts: every node of a small base
graph becomes a fibre Z_m, and each labelled link (a, b, offset) becomes the
matching (a, t) ~ (b, t + offset). Vertex (a, t) gets index a * m + t.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable, Optional

from .bounds import f21
from .core import ARC, EDGE, GraphError, MixedGraph, girth


class ConstructionError(ValueError):
    pass


@dataclass
class LiftNode:
    self_steps: list = field(default_factory=list)  # [(step, kind)]


@dataclass
class LiftSpec:
    m: int
    nodes: list = field(default_factory=list)  # [LiftNode]
    links: list = field(default_factory=list)  # [(a, b, offset, kind)]

    @property
    def order(self) -> int:
        return len(self.nodes) * self.m


def lift(spec: LiftSpec) -> MixedGraph:
    m = spec.m
    if m < 1:
        raise ConstructionError("fibre size must be positive")
    edges: set = set()
    arcs: set = set()

    def add(kind, u, v, what):
        if u == v:
            raise ConstructionError(f"{what} produces a self-loop at vertex {u}")
        if kind == EDGE:
            key = (min(u, v), max(u, v))
            if key in edges:
                raise ConstructionError(f"{what} duplicates edge {key}")
            edges.add(key)
        elif kind == ARC:
            if (u, v) in arcs:
                raise ConstructionError(f"{what} duplicates arc {(u, v)}")
            arcs.add((u, v))
        else:
            raise ConstructionError(f"unknown element kind {kind!r}")

    for a, node in enumerate(spec.nodes):
        for step, kind in node.self_steps:
            s = step % m
            if s == 0:
                raise ConstructionError(f"node {a}: zero self step")
            what = f"node {a} self step {step} ({kind})"
            if kind == EDGE:
                # steps s and m - s give the same edges; step m/2 is a matching
                span = m // 2 if 2 * s == m else m
                for t in range(span):
                    add(kind, a * m + t, a * m + (t + s) % m, what)
            else:
                for t in range(m):
                    add(kind, a * m + t, a * m + (t + s) % m, what)
    nn = len(spec.nodes)
    for a, b, off, kind in spec.links:
        if not (0 <= a < nn and 0 <= b < nn):
            raise ConstructionError(f"link ({a}, {b}) refers to a missing node")
        if a == b:
            raise ConstructionError(f"link ({a}, {b}): use a self step instead")
        what = f"link ({a}, {b}, {off}, {kind})"
        for t in range(m):
            add(kind, a * m + t, b * m + (t + off) % m, what)
    return MixedGraph(nn * m, frozenset(edges), frozenset(arcs))


def fibre_rotation(spec: LiftSpec) -> list[int]:
    """The permutation (a, t) -> (a, t + 1); an automorphism of every lift."""
    m = spec.m
    return [a * m + (t + 1) % m for a in range(len(spec.nodes)) for t in range(m)]


def circulant(n: int, edge_steps=(), arc_steps=()) -> MixedGraph:
    node = LiftNode([(s, EDGE) for s in edge_steps] + [(s, ARC) for s in arc_steps])
    return lift(LiftSpec(n, [node]))


def _voltage_spec(m: int, nodes: int, links, kind=EDGE, arc_step: int = 1) -> LiftSpec:
    return LiftSpec(
        m,
        [LiftNode([(arc_step, ARC)]) for _ in range(nodes)],
        [(a, b, off, kind) for a, b, off in links],
    )


def _builtin_specs() -> dict[str, LiftSpec]:
    specs = {}
    specs["lift317"] = _voltage_spec(
        10, 6,
        [(0, 1, 0), (0, 2, 0), (0, 3, 0), (1, 2, 4), (1, 4, 6),
         (2, 5, 4), (3, 4, 0), (3, 5, 0), (4, 5, 6)],
    )
    specs["lift318"] = LiftSpec(
        38,
        [LiftNode([(1, ARC), (7, EDGE)]), LiftNode([(1, ARC), (11, EDGE)])],
        [(0, 1, 0, EDGE)],
    )
    # outer and inner undirected 17-cycles plus spokes v0j ~ v1,j+-2; inner
    # arcs run i -> i - 6 (with i -> i + 6 a 4-cycle appears)
    specs["lift415"] = LiftSpec(
        17,
        [LiftNode([(7, ARC), (1, EDGE)]), LiftNode([(11, ARC), (8, EDGE)])],
        [(0, 1, 15, EDGE), (0, 1, 2, EDGE)],
    )
    specs["lift416"] = _voltage_spec(
        8, 6,
        [(0, 1, 0), (0, 2, 0), (0, 3, 0), (0, 5, 0), (1, 2, 3), (1, 3, 5),
         (1, 4, 0), (2, 4, 2), (2, 5, 3), (3, 4, 6), (3, 5, 5), (4, 5, 4)],
    )
    specs["lift516"] = _voltage_spec(
        12, 6,
        [(0, 1, 0), (0, 2, 0), (1, 2, 3), (3, 4, 7), (3, 5, 11), (4, 5, 1),
         (0, 4, 0), (1, 5, 3), (0, 3, 0), (0, 3, 8), (1, 4, 5), (1, 4, 9),
         (2, 5, 5), (2, 5, 9), (2, 3, 3)],
    )
    # edges +-1 and arcs +7, +8: an orientation of the cubic residue graph mod 19
    specs["circulant225"] = LiftSpec(19, [LiftNode([(1, EDGE), (7, ARC), (8, ARC)])])
    # three undirected 9-cycles (blue 0, red 1, green 2); arcs blue->red->green->blue
    specs["graph226"] = LiftSpec(
        9,
        [LiftNode([(1, EDGE)]) for _ in range(3)],
        [(0, 1, 0, ARC), (0, 1, 8, ARC), (1, 2, 0, ARC), (1, 2, 1, ARC),
         (2, 0, 4, ARC), (2, 0, 5, ARC)],
    )
    return specs


def builtin_lift_spec(name: str) -> LiftSpec:
    specs = _builtin_specs()
    if name not in specs:
        raise ConstructionError(f"unknown lift {name!r}; known: {', '.join(sorted(specs))}")
    return specs[name]


def bcw(r: int, g: int) -> MixedGraph:
    """Circulant digraph on r(g-1)+1 vertices with arcs i -> i+j, 1 <= j <= r."""
    if r < 1 or g < 2:
        raise ConstructionError("need r >= 1 and g >= 2")
    return circulant(r * (g - 1) + 1, arc_steps=range(1, r + 1))


def oriented_mobius(g: int) -> MixedGraph:
    """Directed (2g-2)-cycle with its g-1 long diagonals as edges."""
    if g < 4:
        raise ConstructionError("need g >= 4")
    n = 2 * g - 2
    return MixedGraph.build(n, [(i, i + g - 1) for i in range(g - 1)], [(i, (i + 1) % n) for i in range(n)])


def cyclic_lex_k2(g: int) -> MixedGraph:
    """Composition of the directed g-cycle with K2; vertex (i, j) is 2i + j."""
    if g < 3:
        raise ConstructionError("need g >= 3")
    edges = [(2 * i, 2 * i + 1) for i in range(g)]
    arcs = [(2 * i + j, 2 * ((i + 1) % g) + k) for i in range(g) for j in (0, 1) for k in (0, 1)]
    return MixedGraph.build(2 * g, edges, arcs)


def _search_cage21_step(g: int) -> Optional[int]:
    n = f21(g)
    for s in range(2, n - 1):
        G = circulant(n, edge_steps=[1], arc_steps=[s])
        if girth(G) == g:
            return s
    return None


# least arc step s giving girth g on Z_{f21(g)} with edge step 1
CAGE21_STEPS = {5: 5, 6: 5, 7: 7, 8: 7, 9: 9, 10: 9, 11: 11, 12: 11}


def cage21(g: int) -> MixedGraph:
    """(2, 1, g)-graph of the minimum possible order, as a circulant."""
    if g < 5:
        raise ConstructionError("need g >= 5")
    s = CAGE21_STEPS.get(g)
    if s is None:
        s = _search_cage21_step(g)
        if s is None:
            raise ConstructionError(f"no circulant arc step found for g={g}")
    return circulant(f21(g), edge_steps=[1], arc_steps=[s])


def theorem_2zg_square(z: int, g: int) -> MixedGraph:
    """g undirected g-cycles; arcs v[i,j] -> v[i+1,j+k] for 0 <= k < z."""
    if not 1 <= z <= g:
        raise ConstructionError("need 1 <= z <= g")
    idx = lambda i, j: (i % g) * g + j % g  # noqa: E731
    edges = [(idx(i, j), idx(i, j + 1)) for i in range(g) for j in range(g)]
    arcs = [(idx(i, j), idx(i + 1, j + k)) for i in range(g) for j in range(g) for k in range(z)]
    return MixedGraph.build(g * g, edges, arcs)


def theorem_2zg_even(z: int, g: int) -> MixedGraph:
    """g - 1 undirected g-cycles; arcs advance within each half of a row and
    swap halves on the way from the last row back to row 0."""
    if g % 2 or g < 6:
        raise ConstructionError("need even g >= 6")
    h = g // 2
    if not 1 <= z <= h:
        raise ConstructionError(f"need 1 <= z <= {h}")
    rows = g - 1
    idx = lambda i, j: i * g + j  # noqa: E731
    edges = [(idx(i, j), idx(i, (j + 1) % g)) for i in range(rows) for j in range(g)]
    arcs = []
    for j in range(h):
        for k in range(z):
            for i in range(rows - 1):
                arcs.append((idx(i, j), idx(i + 1, (j + k) % h)))
                arcs.append((idx(i, h + j), idx(i + 1, h + (j + k) % h)))
            arcs.append((idx(rows - 1, j), idx(0, h + (j + k) % h)))
            arcs.append((idx(rows - 1, h + j), idx(0, (j + k) % h)))
    return MixedGraph.build(rows * g, edges, arcs)


def theorem_22g(g: int) -> MixedGraph:
    """ceil(g/2) undirected cycles of length floor(3g/2), arcs to the next
    cycle at offsets 0 and 1, and at floor(g/2) and floor(g/2)+1 on the wrap."""
    if g < 5:
        raise ConstructionError("need g >= 5")
    s, t = (g + 1) // 2, 3 * g // 2
    idx = lambda i, j: i * t + j % t  # noqa: E731
    edges = [(idx(i, j), idx(i, j + 1)) for i in range(s) for j in range(t)]
    arcs = []
    for j in range(t):
        for i in range(s - 1):
            arcs += [(idx(i, j), idx(i + 1, j)), (idx(i, j), idx(i + 1, j + 1))]
        arcs += [(idx(s - 1, j), idx(0, j + g // 2)), (idx(s - 1, j), idx(0, j + g // 2 + 1))]
    return MixedGraph.build(s * t, edges, arcs)


def petersen_like_12() -> MixedGraph:
    """Cubic girth-5 graph on 12 vertices: a 9-cycle 0..8 and hubs 9, 10, 11,
    hub 9 + c joined to the cycle vertices congruent to c mod 3."""
    edges = [(p, (p + 1) % 9) for p in range(9)]
    edges += [(9 + p % 3, p) for p in range(9)]
    return MixedGraph.build(12, edges)


def graph315() -> MixedGraph:
    """(3, 1, 5)-graph of order 24.

    Outer vertices 0..17 form a directed 18-cycle with chords p ~ p + 4 (two
    undirected 9-cycles, on the even and on the odd positions). Inner
    vertices 18..23 form a directed 6-cycle, and inner vertex 18 + c is
    joined to the three outer vertices p with p = c mod 6.
    """
    arcs = [(p, (p + 1) % 18) for p in range(18)]
    arcs += [(18 + c, 18 + (c + 1) % 6) for c in range(6)]
    edges = [(p, (p + 4) % 18) for p in range(18)]
    edges += [(18 + p % 6, p) for p in range(18)]
    return MixedGraph.build(24, edges, arcs)


def graph316() -> MixedGraph:
    """(3, 1, 6)-graph of order 30 on X = 0..9, Y = 10..19, Z = 20..29.

    Arcs x_i -> x_{i+1}, y_i -> y_{i+1}, z_i -> z_{i+1}; edges x_i ~ y_{i+-2},
    z_i ~ z_{i+5}, and the colour-matching edges x_i ~ z_i and y_{i+5} ~ z_i.
    """
    X, Y, Z = 0, 10, 20
    arcs = [(B + i, B + (i + 1) % 10) for B in (X, Y, Z) for i in range(10)]
    edges = [(X + i, Y + (i + 2) % 10) for i in range(10)]
    edges += [(X + i, Y + (i - 2) % 10) for i in range(10)]
    edges += [(Z + i, Z + i + 5) for i in range(5)]
    edges += [(X + i, Z + i) for i in range(10)]
    edges += [(Y + (i + 5) % 10, Z + i) for i in range(10)]
    return MixedGraph.build(30, edges, arcs)


def hoffman_singleton() -> MixedGraph:
    """Pentagons P_h (vertex 10h + j) and pentagrams Q_i (vertex 10i + 5 + j);
    P_h[j] ~ Q_i[h*i + j mod 5]."""
    edges = []
    for h in range(5):
        for j in range(5):
            edges.append((10 * h + j, 10 * h + (j + 1) % 5))
            edges.append((10 * h + 5 + j, 10 * h + 5 + (j + 2) % 5))
    for h in range(5):
        for j in range(5):
            for i in range(5):
                edges.append((10 * h + j, 10 * i + 5 + (h * i + j) % 5))
    return MixedGraph.build(50, edges)


def orient_cycle(G: MixedGraph, cycle) -> MixedGraph:
    """Replace the edges of a vertex cycle ``c0, c1, ..., ck-1`` by arcs
    c_i -> c_{i+1}."""
    k = len(cycle)
    pairs = [(cycle[i], cycle[(i + 1) % k]) for i in range(k)]
    for u, v in pairs:
        if (min(u, v), max(u, v)) not in G.edges:
            raise GraphError(f"{u}-{v} is not an edge")
    edges = G.edges - {(min(u, v), max(u, v)) for u, v in pairs}
    arcs = G.arcs | frozenset(pairs)
    return MixedGraph(G.n, frozenset(edges), frozenset(arcs))


def hs_orientation(budget: int = 10**7) -> MixedGraph:
    from .hamiltonian import find_hamiltonian_cycle

    G = hoffman_singleton()
    return orient_cycle(G, find_hamiltonian_cycle(G, budget=budget))


@dataclass(frozen=True)
class CatalogEntry:
    name: str
    builder: Callable[..., MixedGraph]
    params: tuple  # names of integer parameters
    expected: Callable[..., tuple]  # params -> (r, z, g, n)
    totally_regular: bool = False


def _lift_entry(name, expected, tr=True):
    return CatalogEntry(name, lambda: lift(builtin_lift_spec(name)), (), lambda: expected, tr)


CATALOG: dict[str, CatalogEntry] = {
    e.name: e
    for e in [
        CatalogEntry("bcw", bcw, ("r", "g"), lambda r, g: (0, r, g, r * (g - 1) + 1), True),
        CatalogEntry("mobius", oriented_mobius, ("g",), lambda g: (1, 1, g, 2 * g - 2), True),
        CatalogEntry("lexk2", cyclic_lex_k2, ("g",), lambda g: (1, 2, g, 2 * g), True),
        CatalogEntry("cage21", cage21, ("g",), lambda g: (2, 1, g, f21(g)), True),
        CatalogEntry("square", theorem_2zg_square, ("z", "g"), lambda z, g: (2, z, g, g * g), True),
        CatalogEntry("even", theorem_2zg_even, ("z", "g"), lambda z, g: (2, z, g, g * g - g), True),
        CatalogEntry(
            "t22g", theorem_22g, ("g",),
            lambda g: (2, 2, g, ((g + 1) // 2) * (3 * g // 2)), True,
        ),
        CatalogEntry("graph315", graph315, (), lambda: (3, 1, 5, 24), True),
        CatalogEntry("graph316", graph316, (), lambda: (3, 1, 6, 30), True),
        _lift_entry("lift317", (3, 1, 7, 60)),
        _lift_entry("lift318", (3, 1, 8, 76)),
        _lift_entry("lift415", (4, 1, 5, 34)),
        _lift_entry("lift416", (4, 1, 6, 48)),
        _lift_entry("lift516", (5, 1, 6, 72)),
        _lift_entry("circulant225", (2, 2, 5, 19)),
        _lift_entry("graph226", (2, 2, 6, 27)),
        CatalogEntry("hs515", hs_orientation, (), lambda: (5, 1, 5, 50), True),
    ]
}


def construct(name: str, *params: int) -> MixedGraph:
    if name not in CATALOG:
        raise ConstructionError(f"unknown construction {name!r}; known: {', '.join(CATALOG)}")
    entry = CATALOG[name]
    if len(params) != len(entry.params):
        raise ConstructionError(f"{name} takes parameters ({', '.join(entry.params)})")
    return entry.builder(*params)
