"""Canonical labelling of mixed graphs.

Colour refinement over the three neighbourhood relations (edge, out-arc,
in-arc) followed by an individualisation-refinement search tree. The
canonical labelling is the leaf whose relabelled element list is
lexicographically least. Automorphisms found along the way (two leaves
with equal encodings) prune sibling subtrees that lie in the same orbit.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional, Sequence

from .core import MixedGraph


@dataclass(frozen=True, order=True)
class CanonicalForm:
    fingerprint: bytes
    # labelling[v] is the canonical label of vertex v
    labelling: tuple = field(default=(), compare=False)


def _refine(G: MixedGraph, colours: list[int]) -> list[int]:
    """Refine an ordered colouring to the coarsest equitable one.

    Colours are ranks 0..k-1; a refined colour always sorts inside the
    range of its parent colour, so the cell order is label independent.
    """
    n = G.n
    nbrs, out, inn = G.nbrs, G.out, G.inn
    k = len(set(colours))
    while True:
        at = colours.__getitem__
        sigs = [
            (
                colours[v],
                tuple(sorted(map(at, nbrs[v]))),
                tuple(sorted(map(at, out[v]))),
                tuple(sorted(map(at, inn[v]))),
            )
            for v in range(n)
        ]
        ranks = {s: i for i, s in enumerate(sorted(set(sigs)))}
        colours = [ranks[s] for s in sigs]
        if len(ranks) == k:
            return colours
        k = len(ranks)


def _initial_colours(G: MixedGraph, partition: Optional[Sequence[int]]) -> list[int]:
    keys = [
        (
            0 if partition is None else partition[v],
            len(G.nbrs[v]),
            len(G.out[v]),
            len(G.inn[v]),
        )
        for v in range(G.n)
    ]
    ranks = {s: i for i, s in enumerate(sorted(set(keys)))}
    return [ranks[s] for s in keys]


def _individualise(colours: list[int], v: int) -> list[int]:
    # v gets a colour just below the rest of its cell
    c = colours[v]
    return [2 * x + (1 if (x == c and u != v) else 0) if x <= c else 2 * x + 1 for u, x in enumerate(colours)]


def _target_cell(colours: list[int]) -> list[int]:
    cells: dict[int, list[int]] = {}
    for v, c in enumerate(colours):
        cells.setdefault(c, []).append(v)
    best = None
    for c in sorted(cells):
        cell = cells[c]
        if len(cell) > 1 and (best is None or len(cell) < len(best)):
            best = cell
    return best or []


def _encode(G: MixedGraph, lab: list[int]) -> tuple:
    es = sorted((min(lab[u], lab[v]), max(lab[u], lab[v])) for u, v in G.edges)
    as_ = sorted((lab[u], lab[v]) for u, v in G.arcs)
    return (tuple(es), tuple(as_))


def _fingerprint(G: MixedGraph, enc: tuple, partition_cells: tuple) -> bytes:
    es, as_ = enc
    parts = [f"n{G.n}", "c" + ",".join(map(str, partition_cells))]
    parts.append("e" + ",".join(f"{u}-{v}" for u, v in es))
    parts.append("a" + ",".join(f"{u}>{v}" for u, v in as_))
    return ";".join(parts).encode("ascii")


class _Search:
    def __init__(self, G: MixedGraph):
        self.G = G
        self.first = None  # (enc, lab)
        self.best = None
        self.generators: list[tuple] = []
        # per tree level: [fixed prefix, explored children, current child]
        self.levels: list[list] = []
        self.abort_to: Optional[int] = None

    def _record_automorphism(self, lab_a, lab_b) -> None:
        # lab_a[v] == lab_b[w]  =>  v -> w
        inv_b = [0] * len(lab_b)
        for w, x in enumerate(lab_b):
            inv_b[x] = w
        gamma = tuple(inv_b[lab_a[v]] for v in range(len(lab_a)))
        if all(gamma[v] == v for v in range(len(gamma))):
            return
        self.generators.append(gamma)
        # unwind to the shallowest level whose current branch is now known
        # to be the image of an explored sibling
        for depth, (fixed, explored, current) in enumerate(self.levels):
            if self._same_orbit(current, [e for e in explored if e != current], fixed):
                self.abort_to = depth
                return

    def _leaf(self, colours) -> None:
        lab = colours
        enc = _encode(self.G, lab)
        if self.first is None:
            self.first = (enc, lab)
            self.best = (enc, lab)
            return
        if enc == self.first[0]:
            self._record_automorphism(self.first[1], lab)
        elif enc == self.best[0]:
            self._record_automorphism(self.best[1], lab)
        elif enc < self.best[0]:
            self.best = (enc, lab)

    def run(self, colours: list[int], fixed: tuple) -> None:
        colours = _refine(self.G, colours)
        cell = _target_cell(colours)
        if not cell:
            self._leaf(colours)
            return
        depth = len(self.levels)
        explored: list[int] = []
        entry = [fixed, explored, None]
        self.levels.append(entry)
        try:
            for v in cell:
                if explored and self._same_orbit(v, explored, fixed):
                    continue
                explored.append(v)
                entry[2] = v
                self.run(_individualise(colours, v), fixed + (v,))
                if self.abort_to is not None:
                    if self.abort_to < depth:
                        return
                    self.abort_to = None
        finally:
            self.levels.pop()

    def _same_orbit(self, v, explored, fixed) -> bool:
        if not explored:
            return False
        gens = [g for g in self.generators if all(g[x] == x for x in fixed)]
        if not gens:
            return False
        # orbit of v under the pointwise stabiliser of the fixed prefix
        orbit = {v}
        stack = [v]
        while stack:
            x = stack.pop()
            for g in gens:
                y = g[x]
                if y not in orbit:
                    orbit.add(y)
                    stack.append(y)
        return any(e in orbit for e in explored)


def canonical_search(G: MixedGraph, partition: Optional[Sequence[int]] = None) -> tuple:
    """Run the canonical-labelling search; returns (form, automorphism generators)."""
    colours = _initial_colours(G, partition)
    s = _Search(G)
    s.run(colours, ())
    enc, lab = s.best
    cells = ()
    if partition is not None:
        inv = [0] * G.n
        for v, x in enumerate(lab):
            inv[x] = v
        cells = tuple(partition[inv[i]] for i in range(G.n))
    return CanonicalForm(_fingerprint(G, enc, cells), tuple(lab)), s.generators


def canonical_form(G: MixedGraph, partition: Optional[Sequence[int]] = None) -> CanonicalForm:
    """Isomorphism-invariant fingerprint of ``G``.

    ``partition`` optionally assigns an integer colour to each vertex;
    isomorphisms must then preserve colours.
    """
    return canonical_search(G, partition)[0]


def automorphism_generators(G: MixedGraph, partition: Optional[Sequence[int]] = None) -> list[tuple]:
    """Automorphisms found by the canonical search (they generate a subgroup
    of the colour-preserving automorphism group, usually all of it)."""
    return canonical_search(G, partition)[1]


def orbits(n: int, generators: Sequence[Sequence[int]]) -> list[int]:
    """Orbit representative (least element) for each point under the group
    generated by ``generators``."""
    parent = list(range(n))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for g in generators:
        for x in range(n):
            a, b = find(x), find(g[x])
            if a != b:
                if a < b:
                    parent[b] = a
                else:
                    parent[a] = b
    return [find(x) for x in range(n)]


def is_isomorphic(G: MixedGraph, H: MixedGraph) -> bool:
    return G.n == H.n and canonical_form(G) == canonical_form(H)
