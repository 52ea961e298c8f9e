from __future__ import annotations

import hashlib

import pytest

from mixedcages.bounds import f21
from mixedcages.canonical import canonical_form, is_isomorphic
from mixedcages.constructions import (
    CAGE21_STEPS,
    CATALOG,
    ConstructionError,
    LiftNode,
    LiftSpec,
    _search_cage21_step,
    bcw,
    builtin_lift_spec,
    cage21,
    circulant,
    construct,
    cyclic_lex_k2,
    fibre_rotation,
    graph315,
    graph316,
    hoffman_singleton,
    lift,
    orient_cycle,
    oriented_mobius,
    petersen_like_12,
    theorem_22g,
    theorem_2zg_even,
    theorem_2zg_square,
)
from mixedcages.core import (
    ARC,
    EDGE,
    MixedGraph,
    arc_cycle_lengths,
    check_totally_regular,
    components,
    girth,
    verify,
)
from mixedcages.hamiltonian import NoHamiltonianCycle, find_hamiltonian_cycle

PINNED = {
    ("bcw", (3, 5)): "b9ad8fe3766028e5e87e",
    ("mobius", (5,)): "5514ab31faea11b90f6f",
    ("lexk2", (7,)): "033b47658526df23827e",
    ("cage21", (5,)): "44e883fb3520c4d8d3b9",
    ("square", (2, 5)): "da025863faee694d68fa",
    ("even", (2, 6)): "341291dae2370a61807b",
    ("t22g", (6,)): "5e7abef28b1d6fa239c6",
    ("graph315", ()): "092030866327f116ee47",
    ("graph316", ()): "6a3cd2a47dbb6ba665f8",
    ("lift317", ()): "97fdc09719ede9846eca",
    ("lift318", ()): "203d4161e59961f06ece",
    ("lift415", ()): "985c37f707e18c471870",
    ("lift416", ()): "7002e0788da18a7b2faa",
    ("lift516", ()): "6ac2b3e9e7a39031f7ca",
    ("circulant225", ()): "ad267252e2924330efb0",
    ("graph226", ()): "5e7abef28b1d6fa239c6",
    ("hs515", ()): "628c19a99796db11c2e2",
}

LIFTS = ["lift317", "lift318", "lift415", "lift416", "lift516", "circulant225", "graph226"]


def check(G, r, z, g, n):
    v = verify(G)
    assert (v.r, v.z, v.girth, v.order) == (r, z, g, n)


@pytest.mark.parametrize("key", sorted(PINNED), ids=lambda k: f"{k[0]}{''.join(map(str, k[1]))}")
def test_catalog_entry_verifies_and_is_pinned(key):
    name, params = key
    entry = CATALOG[name]
    G = construct(name, *params)
    check(G, *entry.expected(*params))
    if entry.totally_regular:
        assert check_totally_regular(G)
    assert hashlib.sha256(canonical_form(G).fingerprint).hexdigest()[:20] == PINNED[key]


def test_catalog_names_all_pinned():
    assert {name for name, _ in PINNED} == set(CATALOG)


def test_construct_errors():
    with pytest.raises(ConstructionError):
        construct("nope")
    with pytest.raises(ConstructionError):
        construct("square", 3)
    with pytest.raises(ConstructionError):
        theorem_2zg_square(6, 5)
    with pytest.raises(ConstructionError):
        theorem_2zg_even(1, 7)
    with pytest.raises(ConstructionError):
        theorem_2zg_even(4, 6)
    with pytest.raises(ConstructionError):
        builtin_lift_spec("lift999")


class TestLift:
    def test_one_node_cage(self):
        spec = LiftSpec(13, [LiftNode([(5, ARC), (1, EDGE)])])
        check(lift(spec), 2, 1, 5, 13)

    def test_lift317_from_listing(self):
        links = [(0, 1, 0), (0, 2, 0), (0, 3, 0), (1, 2, 4), (1, 4, 6), (2, 5, 4), (3, 4, 0), (3, 5, 0), (4, 5, 6)]
        spec = LiftSpec(10, [LiftNode([(1, ARC)]) for _ in range(6)], [(a, b, o, EDGE) for a, b, o in links])
        G = lift(spec)
        check(G, 3, 1, 7, 60)
        assert G == lift(builtin_lift_spec("lift317"))

    def test_lift318_from_listing(self):
        spec = LiftSpec(38, [LiftNode([(1, ARC), (7, EDGE)]), LiftNode([(1, ARC), (11, EDGE)])], [(0, 1, 0, EDGE)])
        check(lift(spec), 3, 1, 8, 76)

    def test_order(self):
        for name in LIFTS:
            spec = builtin_lift_spec(name)
            assert lift(spec).n == spec.order == len(spec.nodes) * spec.m

    def test_complementary_edge_steps_rejected(self):
        with pytest.raises(ConstructionError):
            lift(LiftSpec(10, [LiftNode([(3, EDGE), (7, EDGE)])]))

    def test_duplicate_link_rejected(self):
        with pytest.raises(ConstructionError):
            lift(LiftSpec(5, [LiftNode(), LiftNode()], [(0, 1, 2, EDGE), (0, 1, 2, EDGE)]))

    def test_half_step_is_a_matching(self):
        G = lift(LiftSpec(10, [LiftNode([(5, EDGE)])]))
        assert len(G.edges) == 5
        assert all(len(G.nbrs[v]) == 1 for v in range(10))

    @pytest.mark.parametrize("name", LIFTS)
    def test_fibre_rotation_is_an_automorphism(self, name):
        spec = builtin_lift_spec(name)
        G = lift(spec)
        rot = fibre_rotation(spec)
        assert G.relabel(rot) == G
        assert canonical_form(G.relabel(rot)) == canonical_form(G)

    def test_spec_examples(self):
        check(lift(builtin_lift_spec("lift416")), 4, 1, 6, 48)
        check(lift(builtin_lift_spec("circulant225")), 2, 2, 5, 19)
        G = lift(builtin_lift_spec("graph226"))
        check(G, 2, 2, 6, 27)
        assert check_totally_regular(G)

    def test_cubic_residue_steps(self):
        # 7 and 8 are cubes mod 19
        cubes = {pow(x, 3, 19) for x in range(1, 19)}
        assert {7, 8} <= cubes
        assert circulant(19, [1], [7, 8]) == lift(builtin_lift_spec("circulant225"))


def test_graph226_matches_three_quarter_family():
    assert is_isomorphic(construct("graph226"), theorem_22g(6))


class TestFamilies:
    def test_bcw(self):
        check(bcw(3, 5), 0, 3, 5, 13)
        check(bcw(2, 7), 0, 2, 7, 13)
        C = bcw(1, 6)
        assert arc_cycle_lengths(C) == [6] and not C.edges

    @pytest.mark.parametrize("g", [4, 5, 6, 7])
    def test_mobius(self, g):
        check(oriented_mobius(g), 1, 1, g, 2 * g - 2)

    @pytest.mark.parametrize("g", [3, 7, 10])
    def test_lex_k2(self, g):
        G = cyclic_lex_k2(g)
        check(G, 1, 2, g, 2 * g)
        assert check_totally_regular(G)

    @pytest.mark.parametrize("g", range(5, 13))
    def test_cage21(self, g):
        check(cage21(g), 2, 1, g, f21(g))

    def test_cage21_steps_from_spec(self):
        assert (CAGE21_STEPS[5], CAGE21_STEPS[6], CAGE21_STEPS[7]) == (5, 5, 7)

    @pytest.mark.parametrize("g", range(5, 13))
    def test_cage21_step_table_regenerates(self, g):
        assert _search_cage21_step(g) == CAGE21_STEPS[g]

    @pytest.mark.parametrize("g", [5, 6, 7, 8])
    def test_square_all_z(self, g):
        for z in range(1, g + 1):
            check(theorem_2zg_square(z, g), 2, z, g, g * g)

    @pytest.mark.parametrize("g", [6, 8])
    def test_even_all_z(self, g):
        for z in range(1, g // 2 + 1):
            check(theorem_2zg_even(z, g), 2, z, g, g * g - g)

    @pytest.mark.parametrize("g,n", [(5, 21), (6, 27), (7, 40), (8, 48), (9, 65)])
    def test_three_quarter(self, g, n):
        check(theorem_22g(g), 2, 2, g, n)


class TestSporadic:
    def test_petersen_like(self):
        G = petersen_like_12()
        assert G.n == 12 and all(len(G.nbrs[v]) == 3 for v in range(12)) and girth(G) == 5

    def test_graph315(self):
        G = graph315()
        check(G, 3, 1, 5, 24)
        comps = components(G, undirected_only=True)
        assert sorted(map(len, comps)) == [12, 12]
        P = petersen_like_12()
        for comp in comps:
            relabel = {v: i for i, v in enumerate(comp)}
            H = MixedGraph.build(12, [(relabel[u], relabel[v]) for u, v in G.edges if u in relabel])
            assert is_isomorphic(H, P)
        assert arc_cycle_lengths(G) == [18, 6]

    def test_graph316(self):
        G = graph316()
        check(G, 3, 1, 6, 30)
        assert len(G.edges) == 45
        assert arc_cycle_lengths(G) == [10, 10, 10]

    def test_hoffman_singleton(self):
        G = hoffman_singleton()
        check(G, 7, 0, 5, 50)
        H = orient_cycle(G, find_hamiltonian_cycle(G))
        check(H, 5, 1, 5, 50)
        assert check_totally_regular(H)

    def test_orient_c5(self):
        C5 = MixedGraph.build(5, [(i, (i + 1) % 5) for i in range(5)])
        check(orient_cycle(C5, find_hamiltonian_cycle(C5)), 0, 1, 5, 5)

    def test_petersen_is_not_hamiltonian(self):
        outer = [(i, (i + 1) % 5) for i in range(5)]
        inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
        P = MixedGraph.build(10, outer + inner + [(i, i + 5) for i in range(5)])
        with pytest.raises(NoHamiltonianCycle) as info:
            find_hamiltonian_cycle(P)
        assert info.value.exhausted

    def test_hamiltonian_budget(self):
        with pytest.raises(NoHamiltonianCycle) as info:
            find_hamiltonian_cycle(hoffman_singleton(), budget=3)
        assert not info.value.exhausted
