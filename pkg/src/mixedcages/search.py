"""Exhaustive searches for (r, z, g)-graphs of a given order.

All engines share one backtracking core. A node of the search tree is a
partial graph. One vertex is completed at a time, out-arcs before edges,
partners in ascending order; the next vertex is either the least one with a
degree deficit or (``fail-first``) the one with the fewest spare partners. A partner ``w`` is
admissible for vertex ``v`` when the new element closes no cycle shorter
than ``g``: for an arc ``v -> w`` that means ``w`` cannot reach ``v`` in
``g - 2`` steps, for an edge neither endpoint can reach the other.

Symmetry pruning restricts the partner choice to orbit representatives
under automorphisms of the partial graph that fix ``v`` and every vertex
below the current lower bound; with representatives taken as orbit
minima this loses no isomorphism class.
"""

from __future__ import annotations

import logging
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Iterable, Optional, Sequence

from .canonical import _initial_colours, _refine, automorphism_generators, canonical_form, orbits
from .core import ARC, EDGE, MixedGraph, check_regular, girth

log = logging.getLogger(__name__)

DEFAULT_BUDGET = 10**8

MODES = ("directed-first", "undirected-first", "general")
SYMMETRY = ("none", "root", "full")
ORDERS = ("fail-first", "ascending")


class SearchError(ValueError):
    pass


@dataclass(frozen=True)
class SearchConfig:
    r: int
    z: int
    g: int
    n: int
    partition_filter: str = "all"  # all | equal | explicit
    partitions: tuple = ()  # explicit partitions when partition_filter == "explicit"
    mode: str = "directed-first"
    budget: int = DEFAULT_BUDGET
    jobs: int = 1
    first: bool = False
    symmetry: str = "full"
    order: str = "fail-first"
    # general mode only; None leaves in-degrees unconstrained
    max_indegree: Optional[int] = None

    def __post_init__(self):
        if self.budget <= 0:
            raise SearchError("budget must be positive")
        if self.mode not in MODES:
            raise SearchError(f"unknown mode {self.mode!r}")
        if self.mode == "directed-first" and self.z != 1:
            raise SearchError("directed-first search needs z = 1")
        if self.symmetry not in SYMMETRY:
            raise SearchError(f"unknown symmetry option {self.symmetry!r}")
        if self.order not in ORDERS:
            raise SearchError(f"unknown vertex order {self.order!r}")
        if self.partition_filter not in ("all", "equal", "explicit"):
            raise SearchError(f"unknown partition filter {self.partition_filter!r}")
        if min(self.r, self.z, self.n) < 0 or self.g < 2:
            raise SearchError("invalid parameters")


@dataclass
class SearchStats:
    nodes: int = 0
    girth_prunes: int = 0
    degree_prunes: int = 0
    symmetry_prunes: int = 0
    completions: int = 0

    def add(self, other: "SearchStats") -> None:
        self.nodes += other.nodes
        self.girth_prunes += other.girth_prunes
        self.degree_prunes += other.degree_prunes
        self.symmetry_prunes += other.symmetry_prunes
        self.completions += other.completions


@dataclass
class SearchResult:
    config: SearchConfig
    graphs: list = field(default_factory=list)  # canonically labelled, sorted by fingerprint
    fingerprints: list = field(default_factory=list)
    stats: dict = field(default_factory=dict)  # case label -> SearchStats
    exhaustive: bool = True
    skipped: list = field(default_factory=list)  # (scaffold index, reason)

    @property
    def total(self) -> SearchStats:
        t = SearchStats()
        for s in self.stats.values():
            t.add(s)
        return t

    def summary(self) -> list[str]:
        t = self.total
        lines = [
            f"r={self.config.r}",
            f"z={self.config.z}",
            f"g={self.config.g}",
            f"n={self.config.n}",
            f"mode={self.config.mode}",
            f"found={len(self.graphs)}",
            f"exhaustive={'true' if self.exhaustive else 'false'}",
            f"nodes={t.nodes}",
            f"girth_prunes={t.girth_prunes}",
            f"degree_prunes={t.degree_prunes}",
            f"symmetry_prunes={t.symmetry_prunes}",
        ]
        for label, s in self.stats.items():
            lines.append(f"case[{label}]=nodes:{s.nodes}")
        return lines


# --------------------------------------------------------------------------
# partitions


def enumerate_partitions(n: int, g: int, filter: str = "all", explicit: Sequence = ()) -> list[tuple]:
    """Partitions of ``n`` into parts >= ``g``, parts descending, listed in
    descending lexicographic order."""
    out: list[tuple] = []

    def rec(rest, cap, parts):
        if rest == 0:
            out.append(tuple(parts))
            return
        for p in range(min(rest, cap), g - 1, -1):
            if rest - p == 0 or rest - p >= g:
                rec(rest - p, p, parts + [p])

    if n >= g:
        rec(n, n, [])
    if filter == "equal":
        out = [p for p in out if len(set(p)) == 1]
    elif filter == "explicit":
        wanted = {tuple(sorted(p, reverse=True)) for p in explicit}
        bad = [p for p in wanted if sum(p) != n or min(p) < g]
        if bad:
            raise SearchError(f"partition {bad[0]} does not split {n} into parts >= {g}")
        out = [p for p in out if p in wanted]
    elif filter != "all":
        raise SearchError(f"unknown partition filter {filter!r}")
    return out


def cycle_scaffold(n: int, parts: Sequence[int]) -> MixedGraph:
    """Disjoint directed cycles on consecutive blocks of vertices."""
    arcs = []
    start = 0
    for p in parts:
        arcs += [(start + i, start + (i + 1) % p) for i in range(p)]
        start += p
    if start != n:
        raise SearchError(f"partition {parts} does not sum to {n}")
    return MixedGraph.build(n, arcs=arcs)


# --------------------------------------------------------------------------
# backtracking core


class _Budget(Exception):
    pass


class _Stop(Exception):
    pass


class _Engine:
    def __init__(self, base: MixedGraph, r: int, z: int, g: int, *, max_indegree=None,
                 exact_girth=True, budget=DEFAULT_BUDGET, symmetry="full", first=False,
                 lookahead=True, order="fail-first"):
        n = base.n
        self.n, self.r, self.z, self.g = n, r, z, g
        self.max_in = max_indegree
        self.exact_girth = exact_girth
        self.budget = budget
        self.symmetry = symmetry
        self.first = first
        self.lookahead = lookahead
        # keep computing orbits below a node where they did not prune
        self.keep_symmetry = False
        self.fail_first = order == "fail-first"
        self.edges = set(base.edges)
        self.arcs = set(base.arcs)
        self.deg = [len(base.nbrs[v]) for v in range(n)]
        self.odeg = [len(base.out[v]) for v in range(n)]
        self.ideg = [len(base.inn[v]) for v in range(n)]
        self.fwd = [0] * n  # one-step forward reach: edges and out-arcs
        self.bwd = [0] * n  # one-step backward reach: edges and in-arcs
        self.aout = [0] * n  # arc heads only
        for u, v in base.edges:
            self.fwd[u] |= 1 << v
            self.fwd[v] |= 1 << u
            self.bwd[u] |= 1 << v
            self.bwd[v] |= 1 << u
        for u, v in base.arcs:
            self.fwd[u] |= 1 << v
            self.bwd[v] |= 1 << u
            self.aout[u] |= 1 << v
        self.stats = SearchStats()
        self.found: dict[bytes, MixedGraph] = {}

    # -- element bookkeeping

    def add(self, kind, u, v):
        if kind == EDGE:
            self.edges.add((min(u, v), max(u, v)))
            self.deg[u] += 1
            self.deg[v] += 1
            self.fwd[u] |= 1 << v
            self.fwd[v] |= 1 << u
            self.bwd[u] |= 1 << v
            self.bwd[v] |= 1 << u
        else:
            self.arcs.add((u, v))
            self.odeg[u] += 1
            self.ideg[v] += 1
            self.aout[u] |= 1 << v
            self.fwd[u] |= 1 << v
            self.bwd[v] |= 1 << u

    def remove(self, kind, u, v):
        if kind == EDGE:
            self.edges.discard((min(u, v), max(u, v)))
            self.deg[u] -= 1
            self.deg[v] -= 1
            # an arc may still join the pair
            if (u, v) not in self.arcs:
                self.fwd[u] &= ~(1 << v)
                self.bwd[v] &= ~(1 << u)
            if (v, u) not in self.arcs:
                self.fwd[v] &= ~(1 << u)
                self.bwd[u] &= ~(1 << v)
        else:
            self.arcs.discard((u, v))
            self.odeg[u] -= 1
            self.ideg[v] -= 1
            self.aout[u] &= ~(1 << v)
            if (min(u, v), max(u, v)) not in self.edges:
                self.fwd[u] &= ~(1 << v)
                self.bwd[v] &= ~(1 << u)

    def graph(self) -> MixedGraph:
        return MixedGraph(self.n, frozenset(self.edges), frozenset(self.arcs))

    def _ball(self, x: int, radius: int, step) -> int:
        reach = frontier = 1 << x
        for _ in range(radius):
            nxt = 0
            f = frontier
            while f:
                low = f & -f
                nxt |= step[low.bit_length() - 1]
                f ^= low
            frontier = nxt & ~reach
            if not frontier:
                break
            reach |= frontier
        return reach

    # -- search tree

    def next_vertex(self, start: int) -> int:
        r, z, deg, odeg = self.r, self.z, self.deg, self.odeg
        for v in range(start, self.n):
            if deg[v] < r or odeg[v] < z:
                return v
        return self.n

    def candidates(self, v: int, lower: int) -> tuple[str, list[int], int]:
        """Element kind for ``v``, its admissible partners > ``lower``, and the deficit."""
        radius = self.g - 2
        back = self._ball(v, radius, self.bwd) if radius > 0 else 1 << v
        if self.odeg[v] < self.z:
            kind, need = ARC, self.z - self.odeg[v]
            cands = []
            girth_cut = 0
            for w in range(lower + 1, self.n):
                if w == v or (v, w) in self.arcs:
                    continue
                if self.max_in is not None and self.ideg[w] >= self.max_in:
                    continue
                if back >> w & 1:
                    girth_cut += 1
                    continue
                cands.append(w)
        else:
            kind, need = EDGE, self.r - self.deg[v]
            fwd = self._ball(v, radius, self.fwd) if radius > 0 else 1 << v
            blocked = back | fwd
            cands = []
            girth_cut = 0
            r, deg = self.r, self.deg
            for w in range(lower + 1, self.n):
                if deg[w] < r and w != v:
                    if blocked >> w & 1:
                        girth_cut += 1
                    else:
                        cands.append(w)
        self.stats.girth_prunes += girth_cut
        return kind, cands, need

    def feasible(self, start: int, slack: Optional[list] = None) -> bool:
        """Every unfinished vertex from ``start`` on still has enough admissible
        partners for its remaining out-arcs, edges and (under a tight in-degree
        cap) in-arcs. Vertices below ``start`` are complete."""
        n, r, z = self.n, self.r, self.z
        radius = self.g - 2
        deg, odeg, ideg = self.deg, self.odeg, self.ideg
        deg_open = 0
        in_open = 0
        for w in range(start, n):
            if deg[w] < r:
                deg_open |= 1 << w
        cap = self.max_in
        for w in range(n):
            if cap is None or ideg[w] < cap:
                in_open |= 1 << w
        tight_in = cap is not None and cap == z
        sources = [0] * n if tight_in else None
        for u in range(start, n):
            out_need = z - odeg[u]
            deg_need = r - deg[u]
            if not out_need and not deg_need:
                continue
            back = self._ball(u, radius, self.bwd) if radius > 0 else 1 << u
            if out_need:
                targets = in_open & ~back & ~self.aout[u] & ~(1 << u)
                room = targets.bit_count() - out_need
                if room < 0:
                    return False
                if slack is not None:
                    slack.append((room, u))
                if tight_in:
                    t = targets
                    while t:
                        low = t & -t
                        sources[low.bit_length() - 1] += 1
                        t ^= low
            if deg_need:
                fwd = self._ball(u, radius, self.fwd) if radius > 0 else 1 << u
                room = (deg_open & ~back & ~fwd).bit_count() - deg_need
                if room < 0:
                    return False
                if slack is not None and not out_need:
                    slack.append((room, u))
        if tight_in:
            for w in range(n):
                if ideg[w] < cap and sources[w] < cap - ideg[w]:
                    return False
        return True

    def orbit_representatives(self, v, lower, cands) -> tuple[list[int], bool]:
        """Orbit minima among ``cands`` under automorphisms fixing ``v`` and
        every vertex up to ``lower``; the flag says whether the group may
        still act on deeper nodes."""
        if len(cands) < 2:
            return cands, True
        n = self.n
        colours = [0] * n
        colours[v] = 1
        for x in range(lower + 1):
            colours[x] = 2 + x
        G = self.graph()
        # cells of an equitable partition are unions of orbits
        cells = _refine(G, _initial_colours(G, colours))
        if len(set(cells)) == n:
            return cands, False
        if len({cells[w] for w in cands}) == len(cands):
            return cands, self.keep_symmetry
        gens = automorphism_generators(G, colours)
        if not gens:
            return cands, False
        rep = orbits(n, gens)
        # an orbit of a candidate consists of candidates; keep orbit minima
        seen = set()
        reps = []
        for w in cands:
            if rep[w] not in seen:
                seen.add(rep[w])
                reps.append(w)
        return reps, len(reps) < len(cands) or self.keep_symmetry

    def emit(self):
        self.stats.completions += 1
        G = self.graph()
        if self.exact_girth:
            if girth(G) != self.g:
                return
        cf = canonical_form(G)
        if cf.fingerprint not in self.found:
            self.found[cf.fingerprint] = G.relabel(cf.labelling)
        if self.first:
            raise _Stop

    def root_choices(self) -> tuple[int, str, list[int]]:
        """Vertex, kind and partner choices at the root, after symmetry."""
        v = self.next_vertex(0)
        if v == self.n:
            return v, EDGE, []
        kind, cands, need = self.candidates(v, -1)
        if len(cands) < need:
            return v, kind, []
        if self.symmetry != "none":
            reps, _ = self.orbit_representatives(v, -1, cands)
            self.stats.symmetry_prunes += len(cands) - len(reps)
            cands = reps
        return v, kind, cands

    def run_root(self):
        self.stats.nodes += 1
        v, kind, cands = self.root_choices()
        if v == self.n:
            self.emit()
            return
        for w in cands:
            self.run_child(v, kind, w)

    def run_child(self, v, kind, w):
        self.add(kind, v, w)
        try:
            self.extend(v, kind, w, self.symmetry == "full")
        finally:
            self.remove(kind, v, w)

    def extend(self, run_v: int, run_kind: str, last: int, sym: bool):
        st = self.stats
        st.nodes += 1
        if st.nodes > self.budget:
            raise _Budget
        if self.fail_first:
            # finish the current vertex, then take the one with least room
            if self.deg[run_v] < self.r or self.odeg[run_v] < self.z:
                v = run_v
                ok = self.feasible(0)
            else:
                slack = []
                ok = self.feasible(0, slack)
                v = min(slack)[1] if ok and slack else self.n
            if not ok:
                st.degree_prunes += 1
                return
            if v == self.n:
                self.emit()
                return
        else:
            v = self.next_vertex(run_v)
            if v == self.n:
                self.emit()
                return
            if self.lookahead and not self.feasible(v):
                st.degree_prunes += 1
                return
        kind_now = ARC if self.odeg[v] < self.z else EDGE
        lower = last if (v == run_v and kind_now == run_kind) else -1
        kind, cands, need = self.candidates(v, lower)
        if len(cands) < need:
            st.degree_prunes += 1
            return
        if sym:
            reps, sym = self.orbit_representatives(v, lower, cands)
            st.symmetry_prunes += len(cands) - len(reps)
            cands = reps
        for w in cands:
            self.add(kind, v, w)
            try:
                self.extend(v, kind, w, sym)
            finally:
                self.remove(kind, v, w)


# --------------------------------------------------------------------------
# sharding


@dataclass(frozen=True)
class _Shard:
    label: str
    base: MixedGraph
    r: int
    z: int
    g: int
    max_indegree: Optional[int]
    exact_girth: bool
    budget: int
    symmetry: str
    first: bool
    order: str
    choice: Optional[tuple] = None  # (v, kind, w) applied below the root


def _run_shard(shard: _Shard):
    eng = _Engine(shard.base, shard.r, shard.z, shard.g, max_indegree=shard.max_indegree,
                  exact_girth=shard.exact_girth, budget=shard.budget,
                  symmetry=shard.symmetry, first=shard.first, order=shard.order)
    exhaustive = True
    try:
        if shard.choice is None:
            eng.run_root()
        else:
            v, kind, w = shard.choice
            eng.stats.nodes += 1
            eng.run_child(v, kind, w)
    except _Budget:
        exhaustive = False
    except _Stop:
        pass
    return shard.label, eng.found, eng.stats, exhaustive


def _shards_for(label: str, base: MixedGraph, cfg: SearchConfig, r, z, g, max_in, exact=True):
    common = dict(base=base, r=r, z=z, g=g, max_indegree=max_in, exact_girth=exact,
                  budget=cfg.budget, symmetry=cfg.symmetry, first=cfg.first, order=cfg.order)
    probe = _Engine(base, r, z, g, max_indegree=max_in, exact_girth=exact,
                    budget=cfg.budget, symmetry=cfg.symmetry, order=cfg.order)
    # parity of the total edge deficit never changes
    if sum(r - d for d in probe.deg) % 2 or any(d > r for d in probe.deg):
        return [], probe.stats
    v, kind, cands = probe.root_choices()
    probe.stats.nodes += 1
    if v == probe.n:
        return [_Shard(label, **common)], SearchStats()
    if not cands:
        probe.stats.degree_prunes += 1
        return [], probe.stats
    return [_Shard(f"{label}/{w}", choice=(v, kind, w), **common) for w in cands], probe.stats


def _execute(cfg: SearchConfig, shards: list[_Shard], result: SearchResult, pre_stats: dict):
    if cfg.jobs > 1 and len(shards) > 1:
        with ProcessPoolExecutor(max_workers=cfg.jobs) as ex:
            outputs = list(ex.map(_run_shard, shards))
    else:
        outputs = []
        for sh in shards:
            outputs.append(_run_shard(sh))
            if cfg.first and outputs[-1][1]:
                break
    found: dict[bytes, MixedGraph] = {}
    for label, stats in pre_stats.items():
        result.stats.setdefault(label, SearchStats()).add(stats)
    for label, f, stats, exhaustive in outputs:
        case = label.split("/")[0]
        result.stats.setdefault(case, SearchStats()).add(stats)
        result.exhaustive &= exhaustive
        for fp, G in f.items():
            found.setdefault(fp, G)
        if cfg.first and f:
            break
    keys = sorted(found)
    if cfg.first:
        keys = keys[:1]
    result.fingerprints = keys
    result.graphs = [found[k] for k in keys]
    return result


def search_directed_first(cfg: SearchConfig) -> SearchResult:
    """Fix the arcs as disjoint directed cycles, one case per partition, then
    complete the undirected r-regular part."""
    if cfg.z != 1:
        raise SearchError("directed-first search needs z = 1")
    parts = enumerate_partitions(cfg.n, cfg.g, cfg.partition_filter, cfg.partitions)
    result = SearchResult(cfg)
    shards, pre = [], {}
    for p in parts:
        label = "+".join(map(str, p))
        sh, st = _shards_for(label, cycle_scaffold(cfg.n, p), cfg, cfg.r, 1, cfg.g, 1)
        shards += sh
        pre[label] = st
    return _execute(cfg, shards, result, pre)


def check_scaffold(G: MixedGraph, r: int, g: int, n: int) -> Optional[str]:
    """Reason a scaffold is unusable, or None."""
    if G.n != n:
        return f"order {G.n} != {n}"
    if G.arcs:
        return "scaffold has arcs"
    if any(len(G.nbrs[v]) != r for v in range(n)):
        return f"not {r}-regular"
    gi = girth(G)
    if gi is not None and gi < g:
        return f"girth {gi} < {g}"
    return None


def search_undirected_first(cfg: SearchConfig, scaffolds: Iterable[MixedGraph]) -> SearchResult:
    """Fix an r-regular undirected scaffold, then add z out-arcs and z in-arcs
    per vertex with no short mixed cycle."""
    result = SearchResult(cfg)
    shards, pre = [], {}
    for i, S in enumerate(scaffolds):
        why = check_scaffold(S, cfg.r, cfg.g, cfg.n)
        if why is not None:
            log.warning("scaffold %d skipped: %s", i, why)
            result.skipped.append((i, why))
            continue
        label = f"scaffold{i}"
        sh, st = _shards_for(label, S, cfg, cfg.r, cfg.z, cfg.g, cfg.z)
        shards += sh
        pre[label] = st
    return _execute(cfg, shards, result, pre)


def search_general(cfg: SearchConfig) -> SearchResult:
    """Build arcs and edges together from the empty graph."""
    result = SearchResult(cfg)
    base = MixedGraph(cfg.n)
    shards, st = _shards_for("general", base, cfg, cfg.r, cfg.z, cfg.g, cfg.max_indegree)
    return _execute(cfg, shards, result, {"general": st})


def search(cfg: SearchConfig, scaffolds: Optional[Iterable[MixedGraph]] = None) -> SearchResult:
    if cfg.mode == "directed-first":
        return search_directed_first(cfg)
    if cfg.mode == "undirected-first":
        if scaffolds is None:
            scaffolds = regular_scaffolds(cfg.n, cfg.r, cfg.g)
        return search_undirected_first(cfg, scaffolds)
    return search_general(cfg)


def regular_scaffolds(n: int, r: int, g: int, budget: int = DEFAULT_BUDGET) -> list[MixedGraph]:
    """All r-regular undirected graphs of order n and girth >= g, one per
    isomorphism class. Plain exhaustive generation; small n only."""
    if n * r % 2:
        return []
    eng = _Engine(MixedGraph(n), r, 0, g, exact_girth=False, budget=budget, symmetry="full")
    try:
        eng.run_root()
    except _Budget:
        raise SearchError(f"scaffold generation for n={n}, r={r} exceeded the budget")
    return [eng.found[k] for k in sorted(eng.found)]
