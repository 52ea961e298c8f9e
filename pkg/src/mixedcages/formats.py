"""Text formats: MGF mixed-graph files, graph6 lines, DOT export and the
lift specification language.

MGF::

    mgf <n>
    e <u> <v>      # edge, u < v when normalized
    a <u> <v>      # arc u -> v

``#`` starts a comment, blank lines are ignored, ids are 0-based.
"""

from __future__ import annotations

import networkx as nx

from .constructions import LiftNode, LiftSpec
from .core import MixedGraph


class FormatError(ValueError):
    """Parse failure. ``code`` names the failure class, ``line`` is 1-based."""

    def __init__(self, code: str, message: str, line: int | None = None):
        self.code = code
        self.line = line
        where = f"line {line}: " if line is not None else ""
        super().__init__(f"{where}{message}")


# error codes
BAD_HEADER = "bad-header"
BAD_LINE = "bad-line"
OUT_OF_RANGE = "out-of-range"
DUPLICATE = "duplicate"
SELF_LOOP = "self-loop"
MALFORMED = "malformed"
TRUNCATED = "truncated"


def _content_lines(text: str):
    for no, raw in enumerate(text.split("\n"), start=1):
        line = raw.split("#", 1)[0].strip()
        if line:
            yield no, line


def parse_mgf(text: str) -> MixedGraph:
    lines = _content_lines(text)
    try:
        no, header = next(lines)
    except StopIteration:
        raise FormatError(BAD_HEADER, "empty document, expected 'mgf <n>'", 1) from None
    parts = header.split()
    if len(parts) != 2 or parts[0] != "mgf" or not parts[1].isdigit():
        raise FormatError(BAD_HEADER, f"expected 'mgf <n>', got {header!r}", no)
    n = int(parts[1])
    edges, arcs = set(), set()
    for no, line in lines:
        parts = line.split()
        if len(parts) != 3 or parts[0] not in ("e", "a"):
            raise FormatError(BAD_LINE, f"expected 'e <u> <v>' or 'a <u> <v>', got {line!r}", no)
        try:
            u, v = int(parts[1]), int(parts[2])
        except ValueError:
            raise FormatError(BAD_LINE, f"vertex ids must be integers: {line!r}", no) from None
        for x in (u, v):
            if not 0 <= x < n:
                raise FormatError(OUT_OF_RANGE, f"vertex id {x} out of range for n={n}", no)
        if u == v:
            raise FormatError(SELF_LOOP, f"self-loop at vertex {u}", no)
        if parts[0] == "e":
            key = (min(u, v), max(u, v))
            if key in edges:
                raise FormatError(DUPLICATE, f"duplicate edge {key[0]} {key[1]}", no)
            edges.add(key)
        else:
            if (u, v) in arcs:
                raise FormatError(DUPLICATE, f"duplicate arc {u} {v}", no)
            arcs.add((u, v))
    return MixedGraph(n, frozenset(edges), frozenset(arcs))


def emit_mgf(G: MixedGraph, comments: list[str] | None = None) -> str:
    out = [f"mgf {G.n}"]
    for c in comments or ():
        out.append(f"# {c}")
    out += [f"e {u} {v}" for u, v in sorted(G.edges)]
    out += [f"a {u} {v}" for u, v in sorted(G.arcs)]
    return "\n".join(out) + "\n"


def parse_graph6(line: str) -> MixedGraph:
    """Decode one graph6 line into an undirected mixed graph."""
    s = line.strip()
    if s.startswith(">>graph6<<"):
        s = s[len(">>graph6<<"):]
    if not s:
        raise FormatError(MALFORMED, "empty graph6 line")
    if any(not 63 <= ord(c) <= 126 for c in s):
        raise FormatError(MALFORMED, f"byte outside the graph6 range in {s!r}")
    try:
        H = nx.from_graph6_bytes(s.encode("ascii"))
    except nx.NetworkXError as exc:
        code = TRUNCATED if "Expected" in str(exc) else MALFORMED
        raise FormatError(code, str(exc)) from None
    return MixedGraph.build(H.number_of_nodes(), H.edges())


def emit_graph6(G: MixedGraph) -> str:
    if G.arcs:
        raise FormatError(MALFORMED, "graph6 cannot hold arcs")
    H = nx.Graph()
    H.add_nodes_from(range(G.n))
    H.add_edges_from(G.edges)
    return nx.to_graph6_bytes(H, header=False).decode("ascii").strip()


def read_graph6_file(text: str) -> list[MixedGraph]:
    return [parse_graph6(line) for line in text.splitlines() if line.strip()]


def emit_dot(G: MixedGraph, name: str = "G") -> str:
    """Graphviz digraph; edges carry ``dir=none`` so they draw undirected."""
    out = [f"digraph {name} {{"]
    out += [f"  {v};" for v in range(G.n)]
    out += [f"  {u} -> {v} [dir=none];" for u, v in sorted(G.edges)]
    out += [f"  {u} -> {v};" for u, v in sorted(G.arcs)]
    out.append("}")
    return "\n".join(out) + "\n"


def parse_lift_spec(text: str) -> LiftSpec:
    """Lift language::

        m 10
        node            # opens node 0
        self 1 a
        node            # node 1
        self 4 e
        link 0 1 3 e
    """
    m = None
    nodes: list[LiftNode] = []
    links = []
    kinds = {"e": "e", "a": "a"}
    for no, line in _content_lines(text):
        parts = line.split()
        key = parts[0]
        try:
            if key == "m" and len(parts) == 2:
                if m is not None:
                    raise FormatError(BAD_LINE, "fibre size given twice", no)
                m = int(parts[1])
                if m < 1:
                    raise FormatError(BAD_LINE, "fibre size must be positive", no)
            elif key == "node" and len(parts) == 1:
                nodes.append(LiftNode())
            elif key == "self" and len(parts) == 3 and parts[2] in kinds:
                if not nodes:
                    raise FormatError(BAD_LINE, "'self' before any 'node'", no)
                nodes[-1].self_steps.append((int(parts[1]), kinds[parts[2]]))
            elif key == "link" and len(parts) == 5 and parts[4] in kinds:
                links.append((int(parts[1]), int(parts[2]), int(parts[3]), kinds[parts[4]]))
            else:
                raise FormatError(BAD_LINE, f"cannot parse {line!r}", no)
        except ValueError as exc:
            if isinstance(exc, FormatError):
                raise
            raise FormatError(BAD_LINE, f"expected integers in {line!r}", no) from None
    if m is None:
        raise FormatError(BAD_HEADER, "missing 'm <int>' line")
    for a, b, _, _ in links:
        if not (0 <= a < len(nodes) and 0 <= b < len(nodes)):
            raise FormatError(OUT_OF_RANGE, f"link ({a}, {b}) refers to a missing node")
    return LiftSpec(m, nodes, links)


def emit_lift_spec(spec: LiftSpec) -> str:
    out = [f"m {spec.m}"]
    for node in spec.nodes:
        out.append("node")
        out += [f"self {s} {k}" for s, k in node.self_steps]
    out += [f"link {a} {b} {off} {k}" for a, b, off, k in spec.links]
    return "\n".join(out) + "\n"
