"""Command-line front end.

Diagnostics go to stderr, machine-readable ``key=value`` lines to stdout.
"""

from __future__ import annotations

import argparse
import hashlib
import logging
import sys
from pathlib import Path

from . import bounds
from .constructions import CATALOG, ConstructionError, construct, lift, orient_cycle
from .core import GraphError, MixedGraph, verify
from .formats import (
    FormatError,
    emit_dot,
    emit_graph6,
    emit_mgf,
    parse_graph6,
    parse_lift_spec,
    parse_mgf,
    read_graph6_file,
)
from .hamiltonian import NoHamiltonianCycle, find_hamiltonian_cycle
from .search import DEFAULT_BUDGET, MODES, ORDERS, SYMMETRY, SearchConfig, SearchError, search

EXIT_OK = 0
EXIT_ERROR = 1
EXIT_USAGE = 2  # argparse's own code
EXIT_MISMATCH = 3
EXIT_TRUNCATED = 4
EXIT_NO_CYCLE = 5
EXIT_PARSE = 6
EXIT_CONSTRUCTION = 7
EXIT_IO = 8

# table row -> catalog entry that realises its upper (or exact) value
TABLE_BUILDS = {
    (2, 2, 5): "circulant225",
    (2, 2, 6): "graph226",
    (3, 1, 5): "graph315",
    (3, 1, 6): "graph316",
    (3, 1, 7): "lift317",
    (3, 1, 8): "lift318",
    (4, 1, 5): "lift415",
    (4, 1, 6): "lift416",
    (5, 1, 5): "hs515",
    (5, 1, 6): "lift516",
}


class CliError(Exception):
    def __init__(self, message: str, code: int):
        super().__init__(message)
        self.code = code


def _read_text(path: str) -> str:
    try:
        if path == "-":
            return sys.stdin.read()
        return Path(path).read_text(encoding="ascii")
    except OSError as exc:
        raise CliError(f"cannot read {path}: {exc.strerror}", EXIT_IO) from None
    except UnicodeDecodeError:
        raise CliError(f"{path} is not ASCII text", EXIT_PARSE) from None


def _write_text(path: str | None, text: str) -> None:
    if path is None or path == "-":
        sys.stdout.write(text)
        return
    try:
        Path(path).write_text(text, encoding="ascii")
    except OSError as exc:
        raise CliError(f"cannot write {path}: {exc.strerror}", EXIT_IO) from None


def _format_of(path: str) -> str:
    suffix = Path(path).suffix.lower()
    if suffix == ".mgf":
        return "mgf"
    if suffix in (".g6", ".graph6"):
        return "graph6"
    if suffix == ".dot":
        return "dot"
    raise CliError(f"cannot tell the format of {path!r} (use .mgf, .g6 or .dot)", EXIT_USAGE)


def _load_graph(path: str) -> MixedGraph:
    text = _read_text(path)
    if path != "-" and _format_of(path) == "graph6":
        graphs = read_graph6_file(text)
        if len(graphs) != 1:
            raise CliError(f"{path} holds {len(graphs)} graphs, expected one", EXIT_PARSE)
        return graphs[0]
    if path != "-" and _format_of(path) == "dot":
        raise CliError("DOT is an export-only format", EXIT_USAGE)
    return parse_mgf(text)


def _ints(text: str, count: int | None = None) -> list[int]:
    try:
        values = [int(x) for x in text.split(",") if x.strip()]
    except ValueError:
        raise CliError(f"expected comma-separated integers, got {text!r}", EXIT_USAGE) from None
    if count is not None and len(values) != count:
        raise CliError(f"expected {count} integers, got {text!r}", EXIT_USAGE)
    return values


def _out(lines) -> None:
    for line in lines:
        print(line)


def _flag(b: bool) -> str:
    return "true" if b else "false"


# -- commands


def cmd_construct(args) -> int:
    G = construct(args.id, *args.params)
    entry = CATALOG[args.id]
    r, z, g, n = entry.expected(*args.params)
    comment = f"{args.id} {' '.join(map(str, args.params))}".strip()
    _write_text(args.output, emit_mgf(G, [comment, f"expect r={r} z={z} g={g} n={n}"]))
    return EXIT_OK


def cmd_verify(args) -> int:
    G = _load_graph(args.file)
    v = verify(G)
    lines = [
        f"order={v.order}",
        f"r={v.r if v.r is not None else 'irregular'}",
        f"z={v.z if v.z is not None else 'irregular'}",
        f"totally_regular={_flag(v.totally_regular)}",
        f"girth={v.girth if v.girth is not None else 'inf'}",
    ]
    if args.expect is None:
        _out(lines)
        return EXIT_OK
    r, z, g, n = _ints(args.expect, 4)
    ok = v.matches(r, z, g, n)
    _out(lines + [f"match={_flag(ok)}"])
    if not ok:
        print(f"expected (r,z,g,n)=({r},{z},{g},{n}), got ({v.r},{v.z},{v.girth},{v.order})",
              file=sys.stderr)
        return EXIT_MISMATCH
    return EXIT_OK


def _table_lines() -> list[str]:
    header = "r z g lower exact upper ahm built verified"
    lines = [header]
    for (r, z, g), (lo, exact, up) in sorted(bounds.TABLE.items()):
        name = TABLE_BUILDS[(r, z, g)]
        G = construct(name)
        target = exact if exact is not None else up
        ok = verify(G).matches(r, z, g, target)
        ahm = bounds.ahm_bound(r, g) if z == 1 else "-"
        cells = [r, z, g, lo or "-", exact or "-", up or "-", ahm, name, _flag(ok)]
        lines.append(" ".join(map(str, cells)))
    return lines


def cmd_bound(args) -> int:
    if args.kind == "table":
        if args.values:
            raise CliError("'bound table' takes no arguments", EXIT_USAGE)
        _out(_table_lines())
        return EXIT_OK
    if len(args.values) != 2:
        raise CliError(f"'bound {args.kind}' takes two integers", EXIT_USAGE)
    a, b = args.values
    try:
        value = bounds.ahm_bound(a, b) if args.kind == "ahm" else bounds.moore_bound(a, b)
    except ValueError as exc:
        raise CliError(str(exc), EXIT_USAGE) from None
    print(value)
    return EXIT_OK


def cmd_search(args) -> int:
    explicit = ()
    pfilter = "all"
    if args.partition:
        pfilter = "explicit"
        explicit = (tuple(_ints(args.partition)),)
    elif args.equal_parts:
        pfilter = "equal"
    cfg = SearchConfig(
        args.r, args.z, args.g, args.n,
        partition_filter=pfilter, partitions=explicit, mode=args.mode,
        budget=args.budget, jobs=args.jobs, first=args.first,
        symmetry=args.symmetry, order=args.order, max_indegree=args.max_indegree,
    )
    scaffolds = None
    if args.scaffolds:
        scaffolds = read_graph6_file(_read_text(args.scaffolds))
    elif cfg.mode == "undirected-first":
        print("no --scaffolds given; generating regular scaffolds internally", file=sys.stderr)
    result = search(cfg, scaffolds)
    lines = result.summary()
    for i, fp in enumerate(result.fingerprints):
        lines.append(f"graph[{i}]={hashlib.sha256(fp).hexdigest()[:16]}")
    for i, why in result.skipped:
        print(f"scaffold {i} skipped: {why}", file=sys.stderr)
    if args.output:
        out = Path(args.output)
        try:
            out.mkdir(parents=True, exist_ok=True)
        except OSError as exc:
            raise CliError(f"cannot create {out}: {exc.strerror}", EXIT_IO) from None
        for i, G in enumerate(result.graphs):
            _write_text(str(out / f"graph_{i:03d}.mgf"),
                        emit_mgf(G, [f"search r={cfg.r} z={cfg.z} g={cfg.g} n={cfg.n} #{i}"]))
    _out(lines)
    if not result.exhaustive:
        print("budget exhausted: the result is not a proof of nonexistence", file=sys.stderr)
        return EXIT_TRUNCATED
    return EXIT_OK


def cmd_orient(args) -> int:
    G = _load_graph(args.file)
    try:
        cycle = find_hamiltonian_cycle(G, budget=args.budget)
    except NoHamiltonianCycle as exc:
        print(f"no Hamiltonian cycle: {exc}", file=sys.stderr)
        return EXIT_NO_CYCLE
    _write_text(args.output, emit_mgf(orient_cycle(G, cycle), ["Hamiltonian cycle oriented"]))
    return EXIT_OK


def cmd_lift(args) -> int:
    spec = parse_lift_spec(_read_text(args.specfile))
    _write_text(args.output, emit_mgf(lift(spec)))
    return EXIT_OK


def cmd_convert(args) -> int:
    G = _load_graph(args.input)
    fmt = _format_of(args.out)
    if fmt == "mgf":
        text = emit_mgf(G)
    elif fmt == "graph6":
        text = emit_graph6(G) + "\n"
    else:
        text = emit_dot(G)
    _write_text(args.out, text)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="mixedcages", description="Mixed cages: bounds, constructions, searches.")
    p.add_argument("-v", "--verbose", action="store_true", help="log progress to stderr")
    sub = p.add_subparsers(dest="command", required=True)

    c = sub.add_parser("construct", help="build a catalog graph as MGF")
    c.add_argument("id", choices=sorted(CATALOG))
    c.add_argument("params", nargs="*", type=int)
    c.add_argument("-o", "--output")
    c.set_defaults(func=cmd_construct)

    c = sub.add_parser("verify", help="report degrees, regularity and girth")
    c.add_argument("file", nargs="?", default="-")
    c.add_argument("--expect", metavar="R,Z,G,N")
    c.set_defaults(func=cmd_verify)

    c = sub.add_parser("bound", help="order bounds")
    c.add_argument("kind", choices=["ahm", "moore", "table"])
    c.add_argument("values", nargs="*", type=int)
    c.set_defaults(func=cmd_bound)

    c = sub.add_parser("search", help="exhaustive search at a fixed order")
    for name, what in (("r", "undirected degree"), ("z", "out-degree"), ("g", "girth"), ("n", "order")):
        c.add_argument(name, type=int, help=what)
    c.add_argument("--equal-parts", action="store_true", help="only arc partitions with equal parts")
    c.add_argument("--partition", metavar="P1,P2,...", help="search this arc partition only")
    c.add_argument("--mode", choices=MODES, default="directed-first")
    c.add_argument("--symmetry", choices=SYMMETRY, default="full", help="orbit pruning (default: full)")
    c.add_argument("--order", choices=ORDERS, default="fail-first", help="which vertex to complete next")
    c.add_argument("--max-indegree", type=int, help="general mode: cap on in-degrees")
    c.add_argument("--jobs", type=int, default=1, help="worker processes")
    c.add_argument("--budget", type=int, default=DEFAULT_BUDGET, help="search nodes per shard")
    c.add_argument("--first", action="store_true", help="stop at the first graph")
    c.add_argument("--scaffolds", metavar="FILE", help="graph6 file of undirected scaffolds")
    c.add_argument("-o", "--output", metavar="DIR")
    c.set_defaults(func=cmd_search)

    c = sub.add_parser("orient", help="orient a Hamiltonian cycle of the edges")
    c.add_argument("file")
    c.add_argument("--budget", type=int, default=10**7)
    c.add_argument("-o", "--output")
    c.set_defaults(func=cmd_orient)

    c = sub.add_parser("lift", help="build a cyclic lift from a spec file")
    c.add_argument("specfile")
    c.add_argument("-o", "--output")
    c.set_defaults(func=cmd_lift)

    c = sub.add_parser("convert", help="convert between mgf, graph6 and dot")
    c.add_argument("input")
    c.add_argument("out")
    c.set_defaults(func=cmd_convert)
    return p


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        format="%(levelname)s %(name)s: %(message)s")
    try:
        return args.func(args)
    except CliError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return exc.code
    except FormatError as exc:
        print(f"parse error [{exc.code}]: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except (ConstructionError, GraphError) as exc:
        print(f"construction error: {exc}", file=sys.stderr)
        return EXIT_CONSTRUCTION
    except SearchError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
