import random
from itertools import combinations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from oracles import brute_oddness, brute_r3, brute_rho, naive_colorings, random_cubic
from snarkkit import constructions as C
from snarkkit.coloring import (EdgeColoring, find_3_edge_coloring, is_3_edge_colorable, is_proper,
                               iter_3_edge_colorings, oddness, removal_coloring, resistance_r3,
                               two_factor_cycles, verify_parity, vertex_resistance_rho)
from snarkkit.corpus import bridgeless_cubic_graphs_on
from snarkkit.matchings import enumerate_perfect_matchings
from snarkkit.multipole import EdgeCut, Multipole


def colorings_as_tuples(m, fixed=None):
    return sorted(c.edge_colors + c.semiedge_colors for c in iter_3_edge_colorings(m, fixed))


def test_k4_colorable_and_proper():
    c = find_3_edge_coloring(C.complete4())
    assert c is not None and is_proper(C.complete4(), c)


def test_petersen_uncolorable():
    p = C.petersen()
    assert find_3_edge_coloring(p) is None
    assert naive_colorings(p.n, p.edges, limit=1) == []


def test_B_colorings_match_naive_and_force_a_pair():
    b = C.build_B()
    mine = colorings_as_tuples(b)
    ref = sorted(naive_colorings(b.n, b.edges, b.semiedges))
    assert mine == ref and len(mine) > 0
    for c in iter_3_edge_colorings(b):
        assert c.color_of(b, "a1") == c.color_of(b, "a2")
        assert c.color_of(b, "b1") == c.color_of(b, "b2")
        assert is_proper(b, c)


def test_B_with_split_a_pair_is_uncolorable():
    assert find_3_edge_coloring(C.build_B(), fixed={"a1": 1, "a2": 2}) is None


@pytest.mark.parametrize("build", [C.build_H1, C.build_H2])
def test_forced_poles_uncolorable_under_every_boundary(build):
    h = build()
    labels = [lab for _, lab in h.semiedges]
    assert find_3_edge_coloring(h) is None
    from itertools import product
    for cols in product((1, 2, 3), repeat=len(labels)):
        assert find_3_edge_coloring(h, fixed=dict(zip(labels, cols))) is None


@st.composite
def small_multipoles(draw):
    n = draw(st.integers(1, 9))
    pairs = [(i, j) for i in range(n) for j in range(i + 1, n)]
    chosen = draw(st.lists(st.sampled_from(pairs), unique=True, max_size=min(14, len(pairs)))) if pairs else []
    deg = [0] * n
    edges = []
    for u, v in chosen:
        if deg[u] < 3 and deg[v] < 3:
            edges.append((u, v))
            deg[u] += 1
            deg[v] += 1
    semis = []
    for v in range(n):
        for k in range(draw(st.integers(0, 3 - deg[v]))):
            semis.append((v, f"s{v}{k}"))
    return Multipole(n, edges, semis)


@settings(max_examples=300, deadline=None)
@given(small_multipoles(), st.data())
def test_colorings_agree_with_naive_search(m, data):
    fixed = {}
    for _, lab in m.semiedges:
        if data.draw(st.booleans()):
            fixed[lab] = data.draw(st.integers(1, 3))
    # the naive search colors semiedges in declaration order
    ref = sorted(naive_colorings(m.n, m.edges, m.semiedges, fixed=fixed))
    assert colorings_as_tuples(m, fixed) == ref
    found = find_3_edge_coloring(m, fixed=fixed)
    assert (found is None) == (not ref)
    if found is not None:
        assert is_proper(m, found)
        assert all(found.color_of(m, lab) == c for lab, c in fixed.items())


def test_uncolorable_cubic_graphs_agree_with_naive():
    for n in (4, 6, 8, 10):
        for g in bridgeless_cubic_graphs_on(n):
            assert is_3_edge_colorable(g) == bool(naive_colorings(g.n, g.edges, limit=1))


# -- parity lemma ---------------------------------------------------------------

def all_cuts(m):
    for size in range(1, m.n):
        for side in combinations(range(m.n), size):
            if 0 in side:
                yield EdgeCut.from_side(m, side)


def test_parity_on_all_k4_colorings_and_cuts():
    k4 = C.complete4()
    for c in iter_3_edge_colorings(k4):
        for cut in all_cuts(k4):
            assert verify_parity(k4, c, cut)


def test_parity_holds_on_B_boundaries():
    b = C.build_B()
    for c in iter_3_edge_colorings(b):
        for cut in all_cuts(b):
            assert verify_parity(b, c, cut)


def test_parity_detects_corruption():
    k4 = C.complete4()
    c = find_3_edge_coloring(k4)
    cut = EdgeCut.from_side(k4, [0])
    cols = list(c.edge_colors)
    e0, e1, e2 = sorted(cut.edges)
    cols[e0], cols[e1], cols[e2] = 1, 1, 2
    assert not verify_parity(k4, EdgeColoring(tuple(cols)), cut)


def test_parity_rejects_invalid_cut():
    k4 = C.complete4()
    c = find_3_edge_coloring(k4)
    with pytest.raises(ValueError):
        verify_parity(k4, c, EdgeCut(frozenset({0}), frozenset({0}), frozenset({1, 2, 3})))


def test_parity_on_random_colorable_graphs_small():
    rng = random.Random(11)
    for i in range(20):
        n = rng.choice([8, 10, 12])
        g = Multipole(n, random_cubic(n, seed=100 + i))
        c = find_3_edge_coloring(g)
        if c is None:
            continue
        for cut in all_cuts(g):
            assert verify_parity(g, c, cut)


# -- resistance and oddness -------------------------------------------------------

SMALL = [g for n in (4, 6, 8, 10) for g in bridgeless_cubic_graphs_on(n)] + [C.petersen_triangle()]


@pytest.mark.parametrize("g", SMALL, ids=lambda g: f"n{g.n}-{g.subject_hash[:6]}")
def test_resistance_matches_brute_force(g):
    r, removed = resistance_r3(g)
    assert r == brute_r3(g.n, g.edges) == len(removed)
    assert removal_coloring(g, removed_edges=removed) is not None
    rho, gone = vertex_resistance_rho(g)
    assert rho == brute_rho(g.n, g.edges) == len(gone)
    assert removal_coloring(g, deleted_vertices=gone) is not None
    assert rho == r


@pytest.mark.parametrize("g", SMALL, ids=lambda g: f"n{g.n}-{g.subject_hash[:6]}")
def test_oddness_matches_brute_force(g):
    pms = enumerate_perfect_matchings(g)
    o, tf = oddness(g, pms)
    assert o == brute_oddness(g.n, g.edges) == tf.odd_count
    assert o % 2 == 0
    assert resistance_r3(g)[0] <= o
    assert sorted(v for c in tf.components for v in c) == list(range(g.n))


def test_known_small_values():
    assert resistance_r3(C.complete4())[0] == 0
    assert vertex_resistance_rho(C.complete4())[0] == 0
    p = C.petersen()
    assert resistance_r3(p)[0] == 2 and vertex_resistance_rho(p)[0] == 2
    assert oddness(p, enumerate_perfect_matchings(p))[0] == 2
    assert oddness(C.complete4(), enumerate_perfect_matchings(C.complete4()))[0] == 0


def test_oddness_requires_complete_matching_set():
    p = C.petersen()
    pms = enumerate_perfect_matchings(p)
    from dataclasses import replace
    with pytest.raises(ValueError):
        oddness(p, replace(pms, complete=False))
    with pytest.raises(ValueError):
        oddness(C.complete4(), pms)


def test_two_factor_cycles_rejects_non_factor():
    with pytest.raises(ValueError):
        two_factor_cycles(C.complete4(), [0])


@pytest.mark.parametrize("kind, host, cycles", [
    ("semiblowup", C.complete4(), [(0, 1, 2)]),
    ("blowup", C.complete4(), [(0, 1, 2)]),
    ("semiblowup", C.prism(), [(0, 1, 2)]),
    ("semiblowup", C.k33(), [(0, 3, 1, 4)]),
])
def test_blowup_resistance_bound(kind, host, cycles):
    build = C.semiblowup if kind == "semiblowup" else C.blowup
    g = build(host, cycles)
    bound = C.CycleSelection(host, cycles).resistance_bound()
    r, removed = resistance_r3(g)
    assert r >= bound
    assert removal_coloring(g, removed_edges=removed) is not None
