from __future__ import annotations

import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import mixed_graphs, random_mixed_graph
from mixedcages.canonical import canonical_form
from mixedcages.constructions import CATALOG, builtin_lift_spec, construct, graph315, graph316, lift
from mixedcages.core import MixedGraph, girth
from mixedcages.formats import (
    BAD_HEADER,
    BAD_LINE,
    DUPLICATE,
    MALFORMED,
    OUT_OF_RANGE,
    SELF_LOOP,
    TRUNCATED,
    FormatError,
    emit_dot,
    emit_graph6,
    emit_lift_spec,
    emit_mgf,
    parse_graph6,
    parse_lift_spec,
    parse_mgf,
)

CATALOG_ARGS = {"bcw": (3, 5), "mobius": (5,), "lexk2": (7,), "cage21": (6,), "square": (3, 5), "even": (2, 6), "t22g": (5,)}


def decode_graph6_by_hand(s: str) -> tuple[int, set]:
    """Reference decoder for n <= 62: bits of (i, j), i < j, in column order."""
    data = [ord(c) - 63 for c in s]
    n = data[0]
    bits = []
    for x in data[1:]:
        bits += [(x >> k) & 1 for k in range(5, -1, -1)]
    pairs = [(i, j) for j in range(n) for i in range(j)]
    return n, {p for p, b in zip(pairs, bits) if b}


class TestMgf:
    def test_two_cycle(self):
        G = parse_mgf("mgf 2\na 0 1\ne 0 1\n")
        assert G.n == 2 and girth(G) == 2

    def test_comments_and_blanks(self):
        G = parse_mgf("# leading comment\n\nmgf 3  # header\ne 2 0\n\n# x\na 1 2\n")
        assert G.edges == {(0, 2)} and G.arcs == {(1, 2)}

    @pytest.mark.parametrize(
        "text,code,line",
        [
            ("", BAD_HEADER, 1),
            ("graph 3\n", BAD_HEADER, 1),
            ("mgf -1\n", BAD_HEADER, 1),
            ("mgf 3\ne 0 3\n", OUT_OF_RANGE, 2),
            ("mgf 3\ne 0 1\n\ne 1 0\n", DUPLICATE, 4),
            ("mgf 3\na 0 1\na 0 1\n", DUPLICATE, 3),
            ("mgf 3\na 2 2\n", SELF_LOOP, 2),
            ("mgf 3\nx 0 1\n", BAD_LINE, 2),
            ("mgf 3\ne 0\n", BAD_LINE, 2),
            ("mgf 3\ne 0 one\n", BAD_LINE, 2),
        ],
    )
    def test_errors(self, text, code, line):
        with pytest.raises(FormatError) as info:
            parse_mgf(text)
        assert info.value.code == code and info.value.line == line
        assert f"line {line}" in str(info.value)

    def test_error_codes_distinct(self):
        assert len({BAD_HEADER, OUT_OF_RANGE, DUPLICATE, SELF_LOOP}) == 4

    def test_emit_normalized(self):
        G = MixedGraph.build(4, edges=[(3, 1), (0, 2)], arcs=[(2, 0), (1, 0)])
        assert emit_mgf(G) == "mgf 4\ne 0 2\ne 1 3\na 1 0\na 2 0\n"

    def test_emit_is_a_fixed_point(self):
        text = emit_mgf(graph315())
        assert emit_mgf(parse_mgf(text)) == text

    @pytest.mark.parametrize("name", sorted(CATALOG))
    def test_catalog_roundtrip(self, name):
        G = construct(name, *CATALOG_ARGS.get(name, ()))
        H = parse_mgf(emit_mgf(G, ["comment"]))
        assert (H.n, H.edges, H.arcs) == (G.n, G.edges, G.arcs)

    def test_graph316_fingerprint_roundtrip(self):
        G = graph316()
        assert canonical_form(parse_mgf(emit_mgf(G))) == canonical_form(G)

    @given(mixed_graphs(9))
    @settings(max_examples=100, deadline=None)
    def test_random_roundtrip(self, G):
        assert parse_mgf(emit_mgf(G)) == G


class TestGraph6:
    def test_empty(self):
        G = parse_graph6("D??")
        assert G.n == 5 and not G.edges and not G.arcs

    def test_hand_decoded(self):
        G = parse_graph6("DQc")
        n, edges = decode_graph6_by_hand("DQc")
        assert n == 5 and len(edges) == 4
        assert G.edges == edges == {(0, 2), (1, 3), (0, 4), (3, 4)}

    def test_matches_reference_decoder(self):
        rng = random.Random(3)
        for _ in range(50):
            G = random_mixed_graph(rng, rng.randint(1, 30), rng.random(), 0)
            s = emit_graph6(G)
            assert decode_graph6_by_hand(s) == (G.n, set(G.edges))

    def test_roundtrip_random(self):
        rng = random.Random(11)
        for _ in range(200):
            G = random_mixed_graph(rng, rng.randint(1, 40), rng.random(), 0)
            s = emit_graph6(G)
            assert parse_graph6(s) == G
            assert emit_graph6(parse_graph6(s)) == s

    def test_long_form_header(self):
        G = MixedGraph.build(70, [(i, (i + 1) % 70) for i in range(70)])
        s = emit_graph6(G)
        assert s.startswith("~")
        assert parse_graph6(s) == G

    def test_header_prefix(self):
        assert parse_graph6(">>graph6<<DQc").edges == parse_graph6("DQc").edges

    @pytest.mark.parametrize("line,code", [("D\x7fc", MALFORMED), ("D Qc", MALFORMED), ("", MALFORMED), ("DQ", TRUNCATED)])
    def test_errors(self, line, code):
        with pytest.raises(FormatError) as info:
            parse_graph6(line)
        assert info.value.code == code

    def test_arcs_cannot_be_written(self):
        with pytest.raises(FormatError):
            emit_graph6(MixedGraph.build(2, arcs=[(0, 1)]))


class TestDot:
    def test_single_edge(self):
        text = emit_dot(MixedGraph.build(2, edges=[(0, 1)]))
        assert text.count("dir=none") == 1 and text.count("->") == 1

    def test_single_arc(self):
        text = emit_dot(MixedGraph.build(2, arcs=[(0, 1)]))
        assert "0 -> 1;" in text and "dir=none" not in text

    def test_graph315_counts(self):
        text = emit_dot(graph315())
        lines = text.splitlines()
        assert sum(1 for x in lines if x.strip().rstrip(";").isdigit()) == 24
        assert sum("dir=none" in x for x in lines) == 36
        assert sum("->" in x and "dir=none" not in x for x in lines) == 24

    def test_deterministic(self):
        assert emit_dot(graph316()) == emit_dot(graph316())


class TestLiftSpecText:
    SAMPLE = "m 13\nnode   # the only node\nself 5 a\nself 1 e\n"

    def test_parse(self):
        spec = parse_lift_spec(self.SAMPLE)
        assert spec.m == 13 and len(spec.nodes) == 1
        assert lift(spec).n == 13

    @pytest.mark.parametrize("name", ["lift317", "lift318", "lift415", "lift416", "lift516", "circulant225", "graph226"])
    def test_builtin_roundtrip(self, name):
        spec = builtin_lift_spec(name)
        again = parse_lift_spec(emit_lift_spec(spec))
        assert lift(again) == lift(spec)

    @pytest.mark.parametrize(
        "text,code",
        [
            ("node\n", BAD_HEADER),
            ("m 3\nm 4\n", BAD_LINE),
            ("m 0\n", BAD_LINE),
            ("m 5\nself 1 e\n", BAD_LINE),
            ("m 5\nnode\nself x e\n", BAD_LINE),
            ("m 5\nnode\nself 1 q\n", BAD_LINE),
            ("m 5\nnode\nlink 0 1 2 e\n", OUT_OF_RANGE),
        ],
    )
    def test_errors(self, text, code):
        with pytest.raises(FormatError) as info:
            parse_lift_spec(text)
        assert info.value.code == code


@given(st.integers(1, 62))
@settings(max_examples=30, deadline=None)
def test_graph6_empty_graphs(n):
    G = MixedGraph(n)
    assert parse_graph6(emit_graph6(G)) == G
