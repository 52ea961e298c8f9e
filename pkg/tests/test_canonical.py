from __future__ import annotations

import random

import networkx as nx
from networkx.algorithms.isomorphism import DiGraphMatcher

from conftest import random_mixed_graph, random_permutation
from mixedcages.canonical import automorphism_generators, canonical_form, is_isomorphic, orbits
from mixedcages.constructions import bcw, cyclic_lex_k2, construct, hoffman_singleton, oriented_mobius
from mixedcages.core import MixedGraph, girth


def labelled_digraph(G: MixedGraph) -> nx.DiGraph:
    """Each ordered pair carries the set of element kinds joining it."""
    D = nx.DiGraph()
    D.add_nodes_from(range(G.n))
    for u, v in G.edges:
        for a, b in ((u, v), (v, u)):
            D.add_edge(a, b, kinds=D.get_edge_data(a, b, {"kinds": frozenset()})["kinds"] | {"e"})
    for u, v in G.arcs:
        D.add_edge(u, v, kinds=D.get_edge_data(u, v, {"kinds": frozenset()})["kinds"] | {"a"})
    return D


def oracle_isomorphic(G: MixedGraph, H: MixedGraph) -> bool:
    if G.n != H.n:
        return False
    m = DiGraphMatcher(labelled_digraph(G), labelled_digraph(H), edge_match=lambda x, y: x["kinds"] == y["kinds"])
    return m.is_isomorphic()


def test_relabelling_invariance_small(rng):
    for _ in range(150):
        G = random_mixed_graph(rng, rng.randint(1, 9), rng.random() * 0.5, rng.random() * 0.4)
        H = G.relabel(random_permutation(rng, G.n))
        assert canonical_form(G) == canonical_form(H)


def test_agrees_with_vf2(rng):
    mismatches = 0
    for _ in range(300):
        n = rng.randint(2, 7)
        G = random_mixed_graph(rng, n, 0.3, 0.2)
        H = random_mixed_graph(rng, n, 0.3, 0.2)
        if len(G.edges) != len(H.edges) or len(G.arcs) != len(H.arcs):
            H = G.relabel(random_permutation(rng, n)).with_elements()
        mismatches += is_isomorphic(G, H) != oracle_isomorphic(G, H)
    assert mismatches == 0


def test_labelling_reproduces_fingerprint(rng):
    G = construct("graph315")
    cf = canonical_form(G.relabel(random_permutation(rng, G.n)))
    assert sorted(cf.labelling) == list(range(G.n))


def reverse(G: MixedGraph) -> MixedGraph:
    return MixedGraph(G.n, G.edges, frozenset((v, u) for u, v in G.arcs))


def test_reversed_bcw_is_isomorphic():
    # x -> -x mod 13 maps the reversed arcs i + j -> i back onto arcs of the
    # original, so reversal does not change the class
    G = bcw(3, 5)
    R = reverse(G)
    assert girth(R) == 5
    assert oracle_isomorphic(G, R)
    assert canonical_form(G) == canonical_form(R)
    neg = [(-x) % 13 for x in range(13)]
    assert R.relabel(neg) == G


def test_reversal_can_change_the_class():
    star = MixedGraph.build(5, edges=[(1, 4)], arcs=[(0, 1), (0, 2), (0, 3)])
    assert not oracle_isomorphic(star, reverse(star))
    assert canonical_form(star) != canonical_form(reverse(star))


def test_arc_direction_matters():
    P = MixedGraph.build(3, arcs=[(0, 1), (1, 2)])
    Q = MixedGraph.build(3, arcs=[(0, 1), (2, 1)])
    assert canonical_form(P) != canonical_form(Q)


def test_edge_versus_arc():
    assert canonical_form(MixedGraph.build(2, edges=[(0, 1)])) != canonical_form(MixedGraph.build(2, arcs=[(0, 1)]))


def test_fingerprints_totally_ordered():
    forms = sorted(canonical_form(oriented_mobius(g)) for g in (4, 5, 6))
    assert forms[0] < forms[1] < forms[2]


def test_automorphism_generators_are_automorphisms():
    for G in (bcw(3, 5), cyclic_lex_k2(5), construct("graph316"), hoffman_singleton()):
        for gamma in automorphism_generators(G):
            assert G.relabel(gamma) == G


def test_orbits():
    # the directed 8-cycle with its diagonals is vertex transitive
    assert set(orbits(8, automorphism_generators(oriented_mobius(5)))) == {0}
    # colouring vertex 0 apart leaves it in an orbit of its own
    colours = [1] + [0] * 7
    reps = orbits(8, automorphism_generators(oriented_mobius(5), colours))
    assert reps[0] == 0 and 0 not in reps[1:]
    assert orbits(3, []) == [0, 1, 2]


def test_hoffman_singleton_relabelled_quickly():
    G = hoffman_singleton()
    rng = random.Random(7)
    base = canonical_form(G)
    for _ in range(5):
        assert canonical_form(G.relabel(random_permutation(rng, G.n))) == base
